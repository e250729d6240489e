#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isgd/ids.hpp"
#include "isgd/report.hpp"
#include "isgd/semigroupoid.hpp"
#include "isgd/subset.hpp"

namespace isgd {

using StructurePtr = std::shared_ptr<const InverseSemigroupoid>;

/// Families {X_s} and {theta_s : X_{s*} -> X_s} over a finite carrier.
///
/// Construction only checks shapes (one domain and one map per arrow, sized to
/// the carrier). Axioms are checked by validate_p_axioms() and
/// validate_e_axioms(); identity maps of idempotents are stored, never implied.
class PartialAction {
 public:
  PartialAction(StructurePtr structure, std::vector<std::string> carrier,
                std::vector<Subset> domains, std::vector<PartialMap> maps);

  const InverseSemigroupoid& structure() const { return *structure_; }
  const StructurePtr& structure_ptr() const { return structure_; }

  std::size_t carrier_size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& element_name(ElementId x) const { return carrier_.at(x.index()); }
  std::optional<ElementId> find_element(std::string_view name) const;
  ElementId element(std::string_view name) const;  // throws std::out_of_range
  std::vector<ElementId> elements() const;

  /// X_s
  const Subset& domain(ArrowId s) const { return domains_.at(s.index()); }
  /// theta_s as stored (its definition domain should be X_{s*}).
  const PartialMap& map(ArrowId s) const { return maps_.at(s.index()); }

  /// Field-by-field equality; structures compare by value.
  friend bool operator==(const PartialAction& a, const PartialAction& b);

 private:
  StructurePtr structure_;
  std::vector<std::string> carrier_;
  std::vector<Subset> domains_;
  std::vector<PartialMap> maps_;
};

/// theta_s(x) when x lies in X_{s*}.
std::optional<ElementId> act(const PartialAction& action, ArrowId s, ElementId x);

/// theta_s o theta_t on its largest meaningful domain theta_t^{-1}(X_t & X_{s*}).
PartialMap compose_maps(const PartialAction& action, ArrowId s, ArrowId t);

/// P1-P3, plus the typing of each theta_s as a map X_{s*} -> X_s.
ValidationReport validate_p_axioms(const PartialAction& action);

/// E1-E3: bijectivity with theta_s^{-1} = theta_{s*}, coverage,
/// theta_s o theta_t contained in theta_{st}, and monotonicity in the natural order.
ValidationReport validate_e_axioms(const PartialAction& action);

/// P4: X_s = X_{ss*} for every s.
bool is_global(const PartialAction& action);

struct GlobalDiagnostic {
  bool domains_saturated = false;  // P4
  bool composition_exact = false;  // theta_{st} = theta_s o theta_t for all composable pairs
  bool agree() const { return domains_saturated == composition_exact; }
};
GlobalDiagnostic global_diagnostic(const PartialAction& action);

/// Consequences of the axioms, checked directly: the range of a composite,
/// monotonicity with extension along the natural order, and
/// X_{ef} = X_e & X_f for composable idempotents. Any failure is a bug.
ValidationReport check_derived_propositions(const PartialAction& action);

enum class Coverage {
  kStrict,  // throw CoverageError if a point lies in no X_e
  kTrim,    // drop such points from the carrier
};

/// Restriction to a subset Y of the carrier: X_s = theta_s(Y & X_{s*}) & Y.
/// The new carrier lists the kept points in their original order.
PartialAction restrict(const PartialAction& source, const Subset& subset,
                       Coverage mode = Coverage::kStrict);

}  // namespace isgd
