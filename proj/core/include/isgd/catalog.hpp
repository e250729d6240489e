#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isgd/action.hpp"
#include "isgd/morphism.hpp"

namespace isgd {

struct TaggedAction {
  std::string name;
  ActionPtr action;
  bool global = false;
};

struct CatalogEntry {
  std::string name;
  StructurePtr structure;
  std::vector<TaggedAction> actions;

  std::vector<std::size_t> global_indices() const;
};

// Hand-built fixtures.

/// The eight-arrow semigroupoid on objects u, v with arrows
/// a, a*, b, b*, a*a, aa*, b*b, bb*.
StructurePtr reference_structure();
/// Cyclic action of a on {1,2,3}, everything else the identity.
ActionPtr reference_global_action();
/// Four-point partial action with X_a = {4}.
ActionPtr reference_partial_action();
/// Same, with X_a = {3}; fails validation.
ActionPtr reference_partial_action_broken();

// Families.

StructurePtr cyclic_group(std::size_t n);
StructurePtr symmetric_inverse_monoid(std::size_t n);
StructurePtr pair_groupoid(std::size_t n);
StructurePtr two_element_semilattice();
StructurePtr trivial_monoid();

/// Left translation of a group (or groupoid) on its own arrows.
ActionPtr regular_action(const StructurePtr& structure);
/// Partial bijections acting on their points.
ActionPtr natural_action(const StructurePtr& symmetric_inverse_monoid, std::size_t n);

/// Every catalog structure with at least one global action.
std::vector<CatalogEntry> catalog();

/// Restriction of the chosen global action to a pseudo-random non-empty subset.
/// Deterministic in `seed`; uses trim mode.
PartialAction random_partial_action(const CatalogEntry& entry, std::size_t global_index,
                                    std::uint64_t seed);

/// Adds the globalization of each partial action in `entry` as a new global action.
CatalogEntry grow_catalog(const CatalogEntry& entry);

}  // namespace isgd
