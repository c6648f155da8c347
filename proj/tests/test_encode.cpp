#include <gtest/gtest.h>

#include <map>
#include <random>

#include "imsets/encode.hpp"
#include "oracles.hpp"

using namespace imsets;

namespace {

oracle::Parents parents_of(const DirectedGraph& g) {
  oracle::Parents pa;
  for (Subset s : g.parent_table()) pa.push_back(s.bits);
  return pa;
}

}  // namespace

TEST(EtaIndex, Bijection) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(eta_size(n), static_cast<std::size_t>(n) << (n - 1));
    for (std::size_t k = 0; k < eta_size(n); ++k) {
      const ParentPair p = eta_pair(n, k);
      EXPECT_FALSE(p.parents.contains(p.node));
      EXPECT_EQ(eta_index(n, p), k);
    }
  }
  EXPECT_THROW(eta_index(3, {0, Subset::of({0, 1})}), std::invalid_argument);
}

TEST(Encode, StandardImsetMatchesDefinitionAndOracle) {
  for (int n = 2; n <= 4; ++n)
    for_each_dag(GroundSet(n), [&](const DirectedGraph& d) {
      const StandardImset u = standard_imset_of(d);
      EXPECT_TRUE(u.is_standardized());
      const auto c = oracle::characteristic(parents_of(d));
      EXPECT_EQ(u.values, oracle::u_from_c(c, n));
      EXPECT_EQ(characteristic_of(u).values(), c);
      EXPECT_EQ(u_from_eta(eta_of(d)), u);
      EXPECT_TRUE(eta_of(d).satisfies_block_equalities());
    });
}

TEST(Encode, TriangleCommutes) {
  for (int n = 2; n <= 5; ++n)
    for_each_dag(GroundSet(n), [&](const DirectedGraph& d) {
      const EtaVector eta = eta_of(d);
      EXPECT_EQ(characteristic_of(u_from_eta(eta)), char_from_eta(eta));
    });
}

TEST(Encode, CharacteristicViaSuperTerminals) {
  for_each_dag(GroundSet(4), [&](const DirectedGraph& d) {
    const auto c = char_from_eta(eta_of(d));
    for (std::uint32_t s = 0; s < 16; ++s)
      if (std::popcount(s) >= 2) EXPECT_EQ(c.at(Subset(s)), super_terminal_count(d, Subset(s)));
  });
}

TEST(Encode, RandomRoundTrips) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n) {
    const GroundSet g(n);
    for (int trial = 0; trial < 200; ++trial) {
      CharacteristicImset c(g);
      for (std::uint32_t s = 0; s < g.power(); ++s)
        if (std::popcount(s) >= 2) c.set(Subset(s), static_cast<std::int64_t>(rng() % 7) - 3);
      const StandardImset u = u_from_characteristic(c);
      EXPECT_TRUE(u.is_standardized());
      EXPECT_EQ(characteristic_of(u), c);
      EXPECT_EQ(u.values, oracle::u_from_c(c.values(), n));
    }
    // Standardized u = sum of semi-elementary imsets, then back and forth.
    for (int trial = 0; trial < 100; ++trial) {
      StandardImset u(g);
      for (int k = 0; k < 4; ++k) {
        const int i = static_cast<int>(rng() % n), j = static_cast<int>((i + 1 + rng() % (n - 1)) % n);
        const Subset rest = g.full().without(i).without(j);
        const Subset cset(static_cast<std::uint32_t>(rng() % g.power()) & rest.bits);
        u += static_cast<std::int64_t>(1 + rng() % 3) *
             semi_elementary_imset(g, Subset::singleton(i), Subset::singleton(j), cset);
      }
      EXPECT_TRUE(u.is_standardized());
      EXPECT_EQ(u_from_characteristic(characteristic_of(u)), u);
    }
  }
}

TEST(Encode, MarkovEquivalenceAgreesWithSkeletonAndColliders) {
  for (int n = 3; n <= 5; ++n) {
    std::map<std::vector<std::int64_t>, std::set<std::pair<std::uint64_t, std::set<std::tuple<int, int, int>>>>> by_imset;
    std::set<std::pair<std::uint64_t, std::set<std::tuple<int, int, int>>>> keys;
    for_each_dag(GroundSet(n), [&](const DirectedGraph& d) {
      const auto key = oracle::equivalence_key(parents_of(d));
      by_imset[standard_imset_of(d).values].insert(key);
      keys.insert(key);
    });
    EXPECT_EQ(by_imset.size(), keys.size()) << n;
    for (const auto& [u, ks] : by_imset) EXPECT_EQ(ks.size(), 1u);
  }
}

TEST(Encode, MarkovEquivalentPairs) {
  const GroundSet g(3);
  const auto chain = DirectedGraph::from_arrows(g, {{0, 1}, {1, 2}});
  const auto fork = DirectedGraph::from_arrows(g, {{1, 0}, {1, 2}});
  const auto collider = DirectedGraph::from_arrows(g, {{0, 1}, {2, 1}});
  EXPECT_TRUE(markov_equivalent(chain, fork));
  EXPECT_FALSE(markov_equivalent(chain, collider));
}

TEST(Encode, InvalidInputs) {
  const GroundSet g(3);
  const auto cycle = DirectedGraph::from_arrows(g, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_THROW(standard_imset_of(cycle), std::invalid_argument);
  StandardImset bad(g);
  bad.at(g.full()) = 1;
  EXPECT_THROW(characteristic_of(bad), std::invalid_argument);
  CharacteristicImset c(g);
  EXPECT_THROW(c.set(Subset::singleton(0), 0), std::invalid_argument);
  EXPECT_THROW(semi_elementary_imset(g, Subset::of({0}), Subset::of({0, 1}), Subset()), std::invalid_argument);
  EXPECT_THROW(EtaVector(g, std::vector<std::int64_t>(5)), std::invalid_argument);
}

TEST(Encode, EmptyGraphIsZeroCharacteristic) {
  for (int n = 2; n <= 6; ++n) {
    const GroundSet g(n);
    const DirectedGraph empty(g);
    EXPECT_TRUE(char_from_eta(eta_of(empty)) == CharacteristicImset(g));
    const StandardImset u = standard_imset_of(empty);
    EXPECT_EQ(u.at(g.full()), 1);
    EXPECT_EQ(u.at(Subset()), n - 1);
  }
}
