#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isgd/ids.hpp"
#include "isgd/report.hpp"

namespace isgd {

/// Raw semigroupoid data: a graph of objects and arrows plus a partial
/// multiplication table. Nothing is checked on insertion; see
/// validate_semigroupoid().
///
/// Products follow the juxtaposition convention: product(s, t) is "st", which
/// is meant to be defined exactly when dom(s) == cod(t).
class SemigroupoidTable {
 public:
  ObjectId add_object(std::string name);
  ArrowId add_arrow(std::string name, ObjectId dom, ObjectId cod);
  void set_product(ArrowId s, ArrowId t, ArrowId st);
  void clear_product(ArrowId s, ArrowId t);

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t arrow_count() const { return arrow_names_.size(); }

  const std::string& object_name(ObjectId u) const { return object_names_.at(u.index()); }
  const std::string& arrow_name(ArrowId s) const { return arrow_names_.at(s.index()); }
  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  ObjectId dom(ArrowId s) const { return dom_.at(s.index()); }
  ObjectId cod(ArrowId s) const { return cod_.at(s.index()); }
  bool composable(ArrowId s, ArrowId t) const { return dom(s) == cod(t); }
  std::optional<ArrowId> product(ArrowId s, ArrowId t) const;

  std::vector<ArrowId> arrows() const;
  std::vector<ObjectId> objects() const;

  bool operator==(const SemigroupoidTable&) const = default;

 private:
  void grow_products(std::size_t old_n);

  std::vector<std::string> object_names_;
  std::vector<std::string> arrow_names_;
  std::vector<ObjectId> dom_;
  std::vector<ObjectId> cod_;
  std::vector<std::uint32_t> products_;  // row-major n x n, kUndefined when absent
};

/// Checks the semigroupoid axioms exhaustively: the product is defined on
/// exactly the composable pairs, d(st) = d(t), c(st) = c(s), and (ps)t = p(st).
/// Throws StructureError when dom/cod or a product names an undeclared id.
ValidationReport validate_semigroupoid(const SemigroupoidTable& table);

struct InverseInference;

/// A validated semigroupoid in which every arrow has a unique pseudo-inverse.
/// Only obtainable through infer_inverses(); immutable afterwards.
class InverseSemigroupoid {
 public:
  const SemigroupoidTable& table() const { return table_; }
  std::size_t size() const { return table_.arrow_count(); }

  ObjectId dom(ArrowId s) const { return table_.dom(s); }
  ObjectId cod(ArrowId s) const { return table_.cod(s); }
  bool composable(ArrowId s, ArrowId t) const { return table_.composable(s, t); }
  std::optional<ArrowId> product(ArrowId s, ArrowId t) const { return table_.product(s, t); }
  /// Product of a composable pair; throws std::logic_error otherwise.
  ArrowId mul(ArrowId s, ArrowId t) const;
  ArrowId inverse(ArrowId s) const { return inverse_.at(s.index()); }

  bool is_idempotent(ArrowId s) const;
  const std::string& name(ArrowId s) const { return table_.arrow_name(s); }
  ArrowId arrow(std::string_view name) const;  // throws std::out_of_range
  std::vector<ArrowId> arrows() const { return table_.arrows(); }

  bool operator==(const InverseSemigroupoid&) const = default;

 private:
  friend InverseInference infer_inverses(const SemigroupoidTable&,
                                         const std::optional<std::vector<ArrowId>>&);
  InverseSemigroupoid(SemigroupoidTable table, std::vector<ArrowId> inverse);

  SemigroupoidTable table_;
  std::vector<ArrowId> inverse_;
};

struct InverseInference {
  std::optional<InverseSemigroupoid> structure;  // set iff report.ok()
  ValidationReport report;
};

/// Validates the table, then searches every arrow for all pseudo-inverses
/// (s s' s = s, s' s s' = s'). Succeeds iff each arrow has exactly one. A
/// declared inverse map, when given, must agree with the search result.
InverseInference infer_inverses(
    const SemigroupoidTable& table,
    const std::optional<std::vector<ArrowId>>& declared = std::nullopt);

/// infer_inverses() that throws ValidationError on failure.
InverseSemigroupoid make_inverse_semigroupoid(const SemigroupoidTable& table);

/// E(S) in arrow order.
std::vector<ArrowId> idempotents(const InverseSemigroupoid& isg);

/// e is an identity: es = s and te = t whenever the products are defined.
bool is_identity(const InverseSemigroupoid& isg, ArrowId e);

/// Natural partial order: endpoints agree and s = t s* s.
bool natural_leq(const InverseSemigroupoid& isg, ArrowId s, ArrowId t);

/// The four textbook characterizations of s <= t, evaluated independently.
struct OrderCharacterizations {
  bool same_endpoints = false;
  bool right_self = false;        // s = t s* s
  bool right_idempotent = false;  // s = t e, e idempotent
  bool left_self = false;         // s = s s* t
  bool left_idempotent = false;   // s = f t, f idempotent

  bool holds() const { return same_endpoints && right_self; }
  bool agree() const;
};

OrderCharacterizations natural_leq_characterizations(const InverseSemigroupoid& isg,
                                                     ArrowId s, ArrowId t);

}  // namespace isgd
