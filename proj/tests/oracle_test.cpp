#include <gtest/gtest.h>

#include <random>

#include "kclique/generators.hpp"
#include "kclique/oracle.hpp"

namespace kclique::oracle {
namespace {

TEST(BruteForceCliques, KnownFamilies) {
  EXPECT_EQ(brute_force_cliques(gen::complete(5), 3).size(), 10u);
  EXPECT_TRUE(brute_force_cliques(gen::hypercube(3), 3).empty());
  EXPECT_EQ(brute_force_cliques(gen::k6_minus_edge(), 5),
            (std::vector<std::vector<vertex_t>>{{0, 1, 2, 4, 5}, {0, 1, 3, 4, 5}}));
  EXPECT_TRUE(brute_force_cliques(gen::k6_minus_edge(), 6).empty());
  EXPECT_TRUE(brute_force_cliques(gen::complete(4), 5).empty());
  EXPECT_EQ(brute_force_cliques(gen::complete(4), 0).size(), 1u);
}

TEST(BruteForceCliques, RefusesLargeGraphs) {
  EXPECT_THROW(brute_force_cliques(gen::star(30), 3), RefusedError);
  EXPECT_THROW(clique_counts(gen::star(30)), RefusedError);
  EXPECT_NO_THROW(brute_force_cliques(gen::star(29), 2));
}

TEST(CliqueCounts, AgreesWithSubsetEnumeration) {
  for (int i = 0; i < 20; ++i) {
    const auto g = gen::gnp(static_cast<vertex_t>(4 + i % 12), 0.3 + 0.02 * i, 2000 + i);
    const auto counts = clique_counts(g);
    ASSERT_EQ(counts.size(), g.num_vertices() + 1);
    for (vertex_t k = 0; k <= g.num_vertices(); ++k)
      EXPECT_EQ(counts[k], brute_force_cliques(g, static_cast<int>(k)).size());
    EXPECT_EQ(counts[1], g.num_vertices());
    EXPECT_EQ(counts[2], g.num_edges());
    EXPECT_EQ(counts[3], triangle_count(g));
  }
}

TEST(Degeneracy, KnownFamilies) {
  EXPECT_EQ(exact_degeneracy(gen::star(9)), 1u);
  EXPECT_EQ(exact_degeneracy(gen::hypercube(4)), 4u);
  EXPECT_EQ(exact_community_degeneracy(gen::hypercube(4)), 0u);
  EXPECT_EQ(exact_degeneracy(gen::k6_minus_edge()), 4u);
  EXPECT_EQ(exact_community_degeneracy(gen::k6_minus_edge()), 3u);
  EXPECT_EQ(exact_degeneracy(Graph()), 0u);
}

TEST(Degeneracy, GreedyMatchesDefinition) {
  for (int i = 0; i < 30; ++i) {
    const auto g = gen::gnp(static_cast<vertex_t>(3 + i % 9), 0.2 + 0.02 * i, 2100 + i);
    EXPECT_EQ(exact_degeneracy(g), definitional_degeneracy(g));
    if (g.num_edges() <= 16)
      EXPECT_EQ(exact_community_degeneracy(g), definitional_community_degeneracy(g));
  }
}

TEST(RelevantPairs, Counts) {
  EXPECT_EQ(brute_force_relevant_pairs(6, 3), 3u);
  EXPECT_EQ(brute_force_relevant_pairs(5, 4), 0u);
  for (std::size_t size = 0; size < 40; ++size)
    for (std::size_t c = 0; c < 12; ++c) {
      const std::uint64_t r = size > c + 1 ? (size - c) * (size - c - 1) / 2 : 0;
      EXPECT_EQ(brute_force_relevant_pairs(size, c), r);
    }
}

TEST(SelfConsistency, CliqueSizeBoundedByDegeneracies) {
  for (int i = 0; i < 40; ++i) {
    const auto g = gen::gnp(static_cast<vertex_t>(5 + i % 16), 0.1 + 0.02 * i, 2200 + i);
    const auto r = report(g);
    if (g.num_edges() == 0) continue;
    EXPECT_LT(r.community_degeneracy, r.degeneracy);
    std::size_t largest = 0;
    for (std::size_t k = 0; k < r.clique_counts.size(); ++k)
      if (r.clique_counts[k] > 0) largest = k;
    EXPECT_LE(largest, r.community_degeneracy + 2);
    EXPECT_LE(r.community_degeneracy + 2, r.degeneracy + 1);
    EXPECT_LE(r.triangle_count, std::uint64_t{r.community_degeneracy} * g.num_edges());
  }
}

TEST(MaxOutDegree, StarOrders) {
  const auto g = gen::star(4);
  const std::vector<std::uint64_t> center_first{0, 1, 2, 3, 4}, center_last{1, 2, 3, 4, 0};
  EXPECT_EQ(max_out_degree(g, center_first), 4u);
  EXPECT_EQ(max_out_degree(g, center_last), 1u);
  EXPECT_THROW(max_out_degree(g, std::vector<std::uint64_t>{0}), DimensionError);
}

}  // namespace
}  // namespace kclique::oracle
