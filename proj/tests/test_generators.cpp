#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "isgd/catalog.hpp"
#include "isgd/globalize.hpp"

using namespace isgd;

namespace {

CatalogEntry entry_named(const std::vector<CatalogEntry>& all, const std::string& name) {
  for (const auto& e : all)
    if (e.name == name) return e;
  throw std::out_of_range(name);
}

// Seed whose draw keeps exactly {1, 2} of the reference global action.
constexpr std::uint64_t kReferenceRestrictionSeed = 3;

}  // namespace

TEST(Catalog, RequiredEntries) {
  const auto all = catalog();
  const auto& reference = entry_named(all, "reference");
  EXPECT_EQ(reference.structure->size(), 8u);
  EXPECT_EQ(idempotents(*reference.structure).size(), 4u);

  const auto& z2 = entry_named(all, "Z2");
  EXPECT_EQ(z2.structure->table().object_count(), 1u);
  EXPECT_EQ(z2.structure->size(), 2u);
  EXPECT_EQ(idempotents(*z2.structure).size(), 1u);
  EXPECT_EQ(entry_named(all, "Z3").structure->size(), 3u);

  const auto& i2 = entry_named(all, "I2");
  EXPECT_EQ(i2.structure->size(), 7u);
  EXPECT_TRUE(infer_inverses(i2.structure->table()).structure.has_value());

  const auto& pair2 = entry_named(all, "pair2");
  EXPECT_EQ(pair2.structure->table().object_count(), 2u);
  EXPECT_EQ(pair2.structure->size(), 4u);

  const auto& semi = entry_named(all, "semilattice2");
  EXPECT_EQ(semi.structure->size(), 2u);
  const auto& identity = *semi.actions.front().action;
  for (auto s : semi.structure->arrows())
    for (auto x : identity.domain(s).elements()) EXPECT_EQ(identity.map(s)(x), x);
}

TEST(Catalog, EverythingValidates) {
  for (const auto& entry : catalog()) {
    EXPECT_TRUE(validate_semigroupoid(entry.structure->table()).ok()) << entry.name;
    EXPECT_TRUE(infer_inverses(entry.structure->table()).structure.has_value()) << entry.name;
    EXPECT_FALSE(entry.global_indices().empty()) << entry.name;
    for (const auto& a : entry.actions) {
      EXPECT_TRUE(validate_p_axioms(*a.action).ok()) << a.name;
      EXPECT_EQ(is_global(*a.action), a.global) << a.name;
    }
  }
}

TEST(Catalog, CyclicActionsAreFaithful) {
  const auto all = catalog();
  for (const auto& name : {"Z2", "Z3"}) {
    const auto& entry = entry_named(all, name);
    const auto& x = *entry.actions.front().action;
    std::set<std::vector<std::optional<ElementId>>> maps;
    for (auto s : entry.structure->arrows()) {
      std::vector<std::optional<ElementId>> m;
      for (auto p : x.elements()) m.push_back(x.map(s)(p));
      maps.insert(m);
    }
    EXPECT_EQ(maps.size(), entry.structure->size()) << name;
  }
}

TEST(RandomPartial, FrozenSeedGivesReferenceRestriction) {
  const auto all = catalog();
  const auto& reference = entry_named(all, "reference");
  auto drawn = random_partial_action(reference, 0, kReferenceRestrictionSeed);
  auto ref = oracle::restrict(oracle::reference_table(), oracle::reference_y(), {"1", "2"});
  EXPECT_EQ(drawn.carrier(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(oracle::from_library(drawn).domain, ref.domain);
  EXPECT_EQ(oracle::from_library(drawn).map, ref.map);
}

TEST(RandomPartial, DeterministicAndValid) {
  const auto all = catalog();
  std::size_t draws = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto& entry = all[seed % all.size()];
    const auto idx = entry.global_indices()[seed % entry.global_indices().size()];
    auto a = random_partial_action(entry, idx, seed);
    auto b = random_partial_action(entry, idx, seed);
    EXPECT_EQ(a, b);
    EXPECT_GT(a.carrier_size(), 0u);
    EXPECT_TRUE(validate_p_axioms(a).ok()) << entry.name << " seed " << seed;
    ++draws;
  }
  EXPECT_EQ(draws, 100u);
}

TEST(RandomPartial, RejectsNonGlobalAction) {
  const auto reference = entry_named(catalog(), "reference");
  EXPECT_THROW(random_partial_action(reference, 1, 0), std::invalid_argument);
}

TEST(RandomPartial, FullSubsetIsSource) {
  // An all-ones first draw keeps the whole carrier; scan for one on Z2.
  const auto z2 = entry_named(catalog(), "Z2");
  bool seen_full = false;
  for (std::uint64_t seed = 0; seed < 64 && !seen_full; ++seed) {
    auto a = random_partial_action(z2, 0, seed);
    if (a.carrier_size() == 2) {
      EXPECT_EQ(a, *z2.actions.front().action);
      seen_full = true;
    }
  }
  EXPECT_TRUE(seen_full);
}

TEST(Grow, ReferenceRestrictionAddsFourPointGlobalAction) {
  const auto reference = entry_named(catalog(), "reference");
  auto grown = grow_catalog(reference);
  bool found = false;
  for (const auto& a : grown.actions)
    if (a.name == "reference_restricted_globalized") {
      found = true;
      EXPECT_TRUE(a.global);
      EXPECT_EQ(a.action->carrier_size(), 4u);
      EXPECT_TRUE(is_global(*a.action));
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(grown.actions.size(), reference.actions.size() + 2);
}

TEST(Grow, NoPartialActionsMeansNoChange) {
  const auto z3 = entry_named(catalog(), "Z3");
  auto grown = grow_catalog(z3);
  EXPECT_EQ(grown.actions.size(), z3.actions.size());
}

TEST(Grow, GlobalizingAGlobalActionGivesAnIsomorphicCopy) {
  for (const auto& entry : catalog())
    for (const auto& a : entry.actions)
      if (a.global) {
        auto g = build_globalization(a.action);
        EXPECT_TRUE(is_isomorphism(g.canonical_embedding)) << a.name;
      }
}

TEST(Grow, SecondGenerationRestrictions) {
  auto grown = grow_catalog(entry_named(catalog(), "reference"));
  for (auto idx : grown.global_indices())
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      EXPECT_TRUE(validate_p_axioms(random_partial_action(grown, idx, seed)).ok());
}
