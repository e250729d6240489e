#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "isgd/action.hpp"
#include "isgd/report.hpp"

namespace isgd {

using ActionPtr = std::shared_ptr<const PartialAction>;

/// A carrier map between two actions of the same inverse semigroupoid.
struct SFunction {
  ActionPtr source;
  ActionPtr target;
  std::vector<ElementId> map;  // indexed by source element

  ElementId operator()(ElementId x) const { return map.at(x.index()); }
};

/// Throws std::invalid_argument if the structures differ or the map is not
/// total into the target carrier.
SFunction make_s_function(ActionPtr source, ActionPtr target, std::vector<ElementId> map);
SFunction identity_function(const ActionPtr& action);
/// Inclusion of a restriction into its source; `sub` must list a subset of
/// `super`'s element names.
SFunction inclusion(const ActionPtr& sub, const ActionPtr& super);

/// phi(X_s) in Y_s, and phi(theta_s(x)) = theta_s(phi(x)) on X_{s*}.
ValidationReport is_s_function(const SFunction& f);

/// Injective S-function with X_s = phi^{-1}(theta_s(phi(X) & Y_{s*})) for every s.
ValidationReport is_embedding(const SFunction& f);

/// Independent route: x in X_{s*} iff phi(x) in Y_{s*} and theta_s(phi(x)) in
/// phi(X), with theta_s(phi(x)) = phi(theta_s(x)) in that case.
ValidationReport is_embedding_pointwise(const SFunction& f);

/// Embedding into a global action.
ValidationReport is_globalization_triple(const SFunction& f);

/// g o f. Throws std::invalid_argument unless f.target == g.source.
SFunction compose(const SFunction& g, const SFunction& f);

/// Bijection such that both it and its inverse are S-functions.
bool is_isomorphism(const SFunction& f);

/// The action induced on f's source by restricting f's target to the image of
/// f and relabelling along f. Requires f injective.
PartialAction transport_restriction(const SFunction& f);

/// All S-functions h : from.target -> to.target with h o from = to, found by
/// enumerating every map. Returns nullopt when |to.target|^|from.target|
/// exceeds `bound`.
std::optional<std::vector<std::vector<ElementId>>> enumerate_factorizations(
    const SFunction& from, const SFunction& to, std::uint64_t bound);

/// Endpoint requirements for the mediating map.
enum class TargetCheck {
  kReflector,  // global target, S-function j
  kStrict,     // global target, embedding j (a globalization)
};

/// (j, Z, omega): an S-function into a global action.
class GlobalizationTriple {
 public:
  /// Throws ValidationError if `embedding` fails the requested check.
  static GlobalizationTriple make(SFunction embedding, TargetCheck check = TargetCheck::kStrict);

  const SFunction& embedding() const { return embedding_; }
  bool target_is_global() const { return target_is_global_; }
  bool is_embedding() const { return is_embedding_; }

 private:
  GlobalizationTriple(SFunction f, bool global, bool embedding)
      : embedding_(std::move(f)), target_is_global_(global), is_embedding_(embedding) {}

  SFunction embedding_;
  bool target_is_global_;
  bool is_embedding_;
};

}  // namespace isgd
