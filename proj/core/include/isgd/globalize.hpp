#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "isgd/action.hpp"
#include "isgd/morphism.hpp"
#include "isgd/report.hpp"

namespace isgd {

/// A pair (s, x) with x in X_{s*s}.
struct Seed {
  ArrowId arrow;
  ElementId point;
  auto operator<=>(const Seed&) const = default;
};

/// D/~~ : the seed set together with its equivalence classes.
///
/// Classes are numbered by their least seed in (arrow, point) order unless
/// renumbered; the representative is always the least seed.
class Quotient {
 public:
  Quotient(std::vector<Seed> seeds, std::size_t arrow_count, std::size_t carrier_size,
           const std::vector<std::size_t>& root_of_seed);

  const std::vector<Seed>& seeds() const { return seeds_; }
  std::size_t class_count() const { return representative_.size(); }

  bool contains(Seed p) const;
  ElementId class_of(Seed p) const;  // throws std::out_of_range for non-seeds
  Seed representative(ElementId c) const { return seeds_.at(representative_.at(c.index())); }
  const std::vector<Seed>& members(ElementId c) const { return members_.at(c.index()); }

  /// Same partition; the classes in `leading` come first (repeats ignored),
  /// the rest keep their relative order.
  Quotient renumbered(const std::vector<ElementId>& leading) const;

 private:
  std::size_t slot(Seed p) const { return p.arrow.index() * carrier_size_ + p.point.index(); }

  std::vector<Seed> seeds_;
  std::size_t carrier_size_;
  std::vector<std::uint32_t> seed_slot_;  // (arrow, point) -> index into seeds_, or kUndefined
  std::vector<ElementId> class_of_;        // parallel to seeds_
  std::vector<std::size_t> representative_;
  std::vector<std::vector<Seed>> members_;
};

/// D = {(s, x) : x in X_{s*s}} in (arrow, point) order.
std::vector<Seed> build_seed_set(const PartialAction& action);

/// The generating relation: R1 (t*, s) composable, x in X_{s*t}, theta_{t*s}(x) = y;
/// or R2 both arrows idempotent and x = y.
bool tilde(const PartialAction& action, Seed p, Seed q);

/// Smallest equivalence containing tilde, by union-find over all seed pairs.
Quotient close_equivalence(const std::vector<Seed>& seeds, const PartialAction& action);

/// Domain of eta_s: {(p, x) in D : (s, p) composable, x in X_{p*s*sp}}.
std::vector<Seed> seed_domain(const PartialAction& action, ArrowId s);

struct Globalization {
  ActionPtr input;
  Quotient quotient;
  ActionPtr global_action;    // carrier = classes, X_s = E_s, theta_s = eta_s
  SFunction canonical_embedding;  // i : x -> [e, x]
};

/// Name given to class c in the global action's carrier ("e1", "e2", ...).
std::string class_label(ElementId c);

/// The universal globalization (E, eta, i). Throws ValidationError if the
/// input fails validate_p_axioms, and WellDefinednessError if eta_s disagrees
/// across representatives.
Globalization build_globalization(const ActionPtr& action);

/// sigma([s, x]) = omega_s(j(x)). Throws std::invalid_argument if the triple
/// is over a different input action, WellDefinednessError if two
/// representatives disagree.
SFunction mediating(const Globalization& glob, const GlobalizationTriple& target);

inline constexpr std::uint64_t kDefaultExhaustiveBound = 1'000'000;

/// sigma is an S-function, sigma o i = j, and (within `exhaustive_bound`
/// candidate maps) the only such S-function.
ValidationReport verify_universal(const Globalization& glob, const GlobalizationTriple& target,
                                  const SFunction& sigma,
                                  std::uint64_t exhaustive_bound = kDefaultExhaustiveBound);

/// E_u: classes of seeds whose arrow has codomain u. Throws std::out_of_range.
std::vector<ElementId> fiber_classes(const Globalization& glob, ObjectId u);

/// sigma restricted to every fiber E_u is injective.
ValidationReport check_fiber_injectivity(const SFunction& sigma, const Globalization& glob);

/// Exhaustive audit of the well-definedness lemmas over every pair of
/// equivalent seeds: membership in X_{s*} transfers with equal images, and
/// left multiplication by p preserves both D-membership and equivalence.
ValidationReport audit_closure_lemmas(const PartialAction& action, const Quotient& quotient);

}  // namespace isgd
