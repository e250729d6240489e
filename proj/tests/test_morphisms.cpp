#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "isgd/catalog.hpp"
#include "isgd/errors.hpp"
#include "isgd/globalize.hpp"
#include "isgd/morphism.hpp"

using namespace isgd;
using fixtures::share;

namespace {

ActionPtr restricted_reference() {
  const auto& y = *reference_global_action();
  return share(restrict(y, Subset(3, {y.element("1"), y.element("2")})));
}

std::map<std::string, std::string> by_name(const SFunction& f) {
  std::map<std::string, std::string> out;
  for (auto x : f.source->elements()) out[f.source->element_name(x)] = f.target->element_name(f(x));
  return out;
}

}  // namespace

TEST(SFunction, IdentityAndInclusion) {
  auto x = restricted_reference();
  auto y = reference_global_action();
  EXPECT_TRUE(is_s_function(identity_function(x)).ok());
  auto j = inclusion(x, y);
  EXPECT_TRUE(is_s_function(j).ok());
  EXPECT_TRUE(is_embedding(j).ok());
  EXPECT_TRUE(is_globalization_triple(j).ok());
  EXPECT_TRUE(oracle::is_s_function(oracle::reference_table(), oracle::from_library(*x), oracle::reference_y(), by_name(j)));
}

TEST(SFunction, ShapeErrors) {
  auto x = restricted_reference();
  auto y = reference_global_action();
  EXPECT_THROW(make_s_function(x, y, {ElementId{0u}}), std::invalid_argument);
  EXPECT_THROW(make_s_function(x, y, {ElementId{0u}, ElementId{7u}}), std::invalid_argument);
  auto z2 = regular_action(cyclic_group(2));
  EXPECT_THROW(make_s_function(x, z2, {ElementId{0u}, ElementId{1u}}), std::invalid_argument);
}

TEST(SFunction, EquivarianceFailureHasWitness) {
  auto x = restricted_reference();
  auto y = reference_global_action();
  // 1 -> 2, 2 -> 1 breaks theta_a(1) = 2.
  auto f = make_s_function(x, y, {y->element("2"), y->element("1")});
  auto report = is_s_function(f);
  EXPECT_TRUE(report.has_axiom("s-function-equivariance")) << report;
  EXPECT_FALSE(oracle::is_s_function(oracle::reference_table(), oracle::from_library(*x), oracle::reference_y(), by_name(f)));
}

TEST(Embedding, ConstantMapIsNotInjective) {
  auto z2 = regular_action(cyclic_group(2));
  auto y = regular_action(cyclic_group(2));
  auto f = make_s_function(z2, y, {ElementId{0u}, ElementId{0u}});
  auto report = is_embedding(f);
  EXPECT_TRUE(report.has_axiom("injective")) << report;
}

TEST(Embedding, CanonicalEmbeddingOfFourPointAction) {
  auto glob = build_globalization(reference_partial_action());
  EXPECT_TRUE(is_embedding(glob.canonical_embedding).ok());
  EXPECT_TRUE(is_embedding_pointwise(glob.canonical_embedding).ok());
  EXPECT_TRUE(is_globalization_triple(glob.canonical_embedding).ok());
}

TEST(Embedding, InjectiveSFunctionThatIsNotAnEmbedding) {
  // Same carrier with X_a and X_a* emptied: the identity is an injective
  // S-function, but theta_a(1) = 4 in the target forces 4 into X_a.
  auto x = reference_partial_action();
  const auto& isg = x->structure();
  std::vector<Subset> domains;
  std::vector<PartialMap> maps;
  for (auto s : isg.arrows()) {
    const bool cut = isg.name(s) == "a" || isg.name(s) == "a*";
    domains.push_back(cut ? Subset(4) : x->domain(s));
    maps.push_back(cut ? PartialMap(4) : x->map(s));
  }
  auto smaller = share(PartialAction(x->structure_ptr(), x->carrier(), domains, maps));
  ASSERT_TRUE(validate_p_axioms(*smaller).ok()) << validate_p_axioms(*smaller);
  auto f = make_s_function(smaller, x, smaller->elements());
  EXPECT_TRUE(is_s_function(f).ok());
  auto report = is_embedding(f);
  EXPECT_TRUE(report.has_axiom("embedding")) << report;
  EXPECT_FALSE(is_embedding_pointwise(f).ok());
}

TEST(Globalization, IdentityOnNonGlobalFailsGlobalCheck) {
  auto x = reference_partial_action();
  auto report = is_globalization_triple(identity_function(x));
  EXPECT_TRUE(report.has_axiom("global")) << report;
  EXPECT_THROW(GlobalizationTriple::make(identity_function(x)), ValidationError);
}

TEST(Compose, IdentityIsNeutralAndEndpointsChecked) {
  auto x = restricted_reference();
  auto y = reference_global_action();
  auto j = inclusion(x, y);
  EXPECT_EQ(compose(identity_function(y), j).map, j.map);
  EXPECT_EQ(compose(j, identity_function(x)).map, j.map);
  EXPECT_THROW(compose(j, j), std::invalid_argument);
}

TEST(Compose, ChainOfInclusions) {
  auto y = reference_global_action();
  auto mid = share(restrict(*y, Subset(3, {y->element("1"), y->element("2")})));
  auto small = share(restrict(*mid, Subset(2, {mid->element("2")})));
  auto direct = share(restrict(*y, Subset(3, {y->element("2")})));
  EXPECT_EQ(*small, *direct);
  auto composite = compose(inclusion(mid, y), inclusion(small, mid));
  EXPECT_EQ(composite.map, inclusion(direct, y).map);
  EXPECT_TRUE(is_embedding(composite).ok());
}

TEST(Isomorphism, Basics) {
  auto y = reference_global_action();
  EXPECT_TRUE(is_isomorphism(identity_function(y)));
  auto glob = build_globalization(y);
  EXPECT_EQ(glob.global_action->carrier_size(), 3u);
  EXPECT_TRUE(is_isomorphism(glob.canonical_embedding));
  auto x = restricted_reference();
  EXPECT_FALSE(is_isomorphism(inclusion(x, y)));
}

TEST(Transport, RecoversRestrictedAction) {
  auto x = restricted_reference();
  auto y = reference_global_action();
  EXPECT_EQ(transport_restriction(inclusion(x, y)), *x);
}

TEST(Factorizations, EnumeratesOnlyCommutingSFunctions) {
  auto x = restricted_reference();
  auto y = reference_global_action();
  auto j = inclusion(x, y);
  auto id = identity_function(x);
  auto all = enumerate_factorizations(id, j, 1'000'000);
  ASSERT_TRUE(all);
  // Maps h on {1,2} with h o id = j: only j itself.
  ASSERT_EQ(all->size(), 1u);
  EXPECT_EQ(all->front(), j.map);
  EXPECT_FALSE(enumerate_factorizations(id, j, 8));
}
