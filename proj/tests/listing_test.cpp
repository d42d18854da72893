#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kclique/community.hpp"
#include "kclique/generators.hpp"
#include "kclique/listing.hpp"
#include "kclique/oracle.hpp"
#include "kclique/ordering.hpp"
#include "test_graphs.hpp"

namespace kclique {
namespace {

using testing::corpus_graph;

// Everything run_degeneracy needs, kept alive together.
struct Prepared {
  OrientedGraph dag;
  CommunityStore store;
  EdgeProbe probe;

  Prepared(const Graph& g, const VertexOrder& order, ProbeConfig config = {})
      : dag(orient(g, order)), store(build_communities(dag)),
        probe(build_probe(dag, store, store.max_size(), config)) {}

  ListingResult run(int k, CliqueSink& sink, ListingOptions options = {}) const {
    return run_degeneracy(dag, store, probe, k, sink, options);
  }
  std::uint64_t count(int k, ListingOptions options = {}) const {
    CliqueSink sink;
    return run(k, sink, options).count;
  }
};

std::uint64_t degeneracy_count(const Graph& g, int k) {
  return Prepared(g, degeneracy_order(g).order).count(k);
}

std::uint64_t commdeg_count(const Graph& g, int k, ListingOptions options = {}) {
  CliqueSink sink;
  return run_commdeg(g, commdeg_order_greedy(g).edge_order, k, sink, options).count;
}

std::uint64_t hybrid_count(const Graph& g, int k, ListingOptions options = {}) {
  CliqueSink sink;
  return run_hybrid(g, k, 0.5, sink, options).count;
}

TEST(RelevantPairs, SixVerticesGapThree) {
  std::vector<RelevantPairs::Pair> pairs;
  for (auto p : relevant_pairs(CandidateSet({0, 1, 2, 3, 4, 5}), 3)) pairs.push_back(p);
  EXPECT_EQ(pairs, (std::vector<RelevantPairs::Pair>{{0, 4}, {0, 5}, {1, 5}}));
}

TEST(RelevantPairs, NoRoom) {
  for (std::size_t c = 0; c < 6; ++c) {
    const RelevantPairs pairs(c + 1, c);
    EXPECT_EQ(pairs.begin(), pairs.end());
    EXPECT_EQ(relevant_pair_count(c + 1, c), 0u);
  }
  const RelevantPairs empty(0, 0);
  EXPECT_EQ(empty.begin(), empty.end());
}

TEST(RelevantPairs, CountMatchesClosedFormAndScan) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    const std::size_t size = 3 + rng() % 38;
    const std::size_t c = rng() % 11;
    std::uint64_t iterated = 0;
    for (auto [i, j] : RelevantPairs(size, c)) {
      EXPECT_LT(i, j);
      EXPECT_GE(j - i - 1, c);
      ++iterated;
    }
    EXPECT_EQ(iterated, relevant_pair_count(size, c));
    EXPECT_EQ(iterated, oracle::brute_force_relevant_pairs(size, c));
  }
}

TEST(RecursiveCount, SingleVertexBaseCase) {
  const Prepared p(gen::complete(6), VertexOrder::identity(6));
  CliqueSink sink(CliqueSink::Mode::kCollect);
  SearchStats stats;
  const vertex_t prefix[] = {0, 5};
  recursive_count(p.dag, p.store, p.probe, CandidateSet({1, 2, 3, 4}), 1, prefix, sink, stats);
  EXPECT_EQ(sink.count(), 4u);
  EXPECT_EQ(sink.canonical().front(), (std::vector<vertex_t>{0, 1, 5}));
}

TEST(RecursiveCount, NoSixCliqueBelowSupportingEdge) {
  const auto g = gen::k6_minus_edge();
  for (auto strategy : {ProbeStrategy::kMatrix, ProbeStrategy::kHash}) {
    const Prepared p(g, VertexOrder::identity(6), {.force = strategy});
    CliqueSink sink;
    SearchStats stats;
    const vertex_t prefix[] = {0, 5};
    recursive_count(p.dag, p.store, p.probe, CandidateSet({1, 2, 3, 4}), 4, prefix, sink, stats);
    EXPECT_EQ(sink.count(), 0u);
    EXPECT_GT(stats.edge_probes, 0u);
  }
}

TEST(RecursiveCount, K5SupportingEdgeTriangles) {
  const auto g = gen::complete(5);
  const Prepared p(g, VertexOrder::identity(5));
  const CandidateSet I({1, 2, 3});
  CliqueSink sink(CliqueSink::Mode::kCollect);
  SearchStats stats;
  const vertex_t prefix[] = {0, 4};
  recursive_count(p.dag, p.store, p.probe, I, 3, prefix, sink, stats);
  const auto sub = induced_subgraph(p.dag, I).undirected();
  EXPECT_EQ(sink.count(), oracle::brute_force_cliques(sub, 3).size());
  EXPECT_EQ(sink.count(), 1u);
}

TEST(RecursiveCount, RejectsNonPositiveC) {
  const Prepared p(gen::complete(3), VertexOrder::identity(3));
  CliqueSink sink;
  SearchStats stats;
  EXPECT_THROW(recursive_count(p.dag, p.store, p.probe, CandidateSet({1}), 0, {}, sink, stats),
               ParameterError);
}

TEST(RunDegeneracy, GoldenCounts) {
  const auto fig = gen::k6_minus_edge();
  EXPECT_EQ(degeneracy_count(fig, 5), 2u);
  EXPECT_EQ(degeneracy_count(fig, 6), 0u);
  EXPECT_EQ(degeneracy_count(gen::complete(7), 4), 35u);
  // oracle value for this instance
  EXPECT_EQ(degeneracy_count(gen::gnp(18, 0.5, 7), 5), 9u);
  EXPECT_EQ(oracle::brute_force_cliques(gen::gnp(18, 0.5, 7), 5).size(), 9u);
}

TEST(RunDegeneracy, SmallK) {
  const auto g = gen::gnp(20, 0.3, 4);
  EXPECT_EQ(degeneracy_count(g, 1), g.num_vertices());
  EXPECT_EQ(degeneracy_count(g, 2), g.num_edges());
  EXPECT_EQ(degeneracy_count(g, 3), count_triangles(g));
  const Prepared p(g, degeneracy_order(g).order);
  CliqueSink sink;
  EXPECT_THROW(p.run(0, sink), ParameterError);
  EXPECT_THROW(run_commdeg(g, commdeg_order_greedy(g).edge_order, 0, sink), ParameterError);
  EXPECT_THROW(run_hybrid(g, 0, 0.5, sink), ParameterError);
  EXPECT_THROW(run_hybrid(g, 3, 0.0, sink), ParameterError);
  EXPECT_THROW(run_commdeg(g, EdgeOrder::identity(3), 4, sink), DimensionError);
}

TEST(RunCommdeg, GoldenCounts) {
  for (int k = 3; k <= 5; ++k) EXPECT_EQ(commdeg_count(gen::hypercube(3), k), 0u);
  EXPECT_EQ(commdeg_count(gen::complete(6), 4), 15u);
  EXPECT_EQ(commdeg_count(gen::k6_minus_edge(), 5), 2u);
  const auto g = gen::gnp(15, 0.4, 2);
  EXPECT_EQ(commdeg_count(g, 1), g.num_vertices());
  EXPECT_EQ(commdeg_count(g, 2), g.num_edges());
}

TEST(RunHybrid, GoldenCounts) {
  EXPECT_EQ(hybrid_count(gen::complete(6), 4), 15u);
  EXPECT_EQ(hybrid_count(gen::k6_minus_edge(), 5), 2u);
  const auto g = gen::gnp(15, 0.4, 2);
  EXPECT_EQ(hybrid_count(g, 1), g.num_vertices());
  EXPECT_EQ(hybrid_count(g, 2), g.num_edges());
}

TEST(RunHybrid, AgreesWithDegeneracy) {
  for (int i = 0; i < 50; ++i) {
    const auto g = gen::gnp(static_cast<vertex_t>(6 + i % 19), 0.2 + 0.014 * i, 1600 + i);
    for (int k = 2; k <= static_cast<int>(g.num_vertices()); ++k)
      ASSERT_EQ(hybrid_count(g, k), degeneracy_count(g, k)) << "graph " << i << " k " << k;
  }
}

TEST(Listing, OracleEquivalenceSample) {
  for (int i = 0; i < 200; i += 7) {
    const auto g = corpus_graph(i);
    const auto expected = oracle::clique_counts(g);
    for (int k = 3; k <= static_cast<int>(g.num_vertices()); ++k) {
      EXPECT_EQ(degeneracy_count(g, k), expected[k]) << "graph " << i << " k " << k;
      EXPECT_EQ(commdeg_count(g, k), expected[k]) << "graph " << i << " k " << k;
      EXPECT_EQ(hybrid_count(g, k), expected[k]) << "graph " << i << " k " << k;
    }
  }
}

TEST(Listing, CollectModeListsEachCliqueOnce) {
  for (int i = 0; i < 200; i += 13) {
    const auto g = corpus_graph(i);
    const auto n = static_cast<int>(g.num_vertices());
    const Prepared p(g, degeneracy_order(g).order);
    for (int k = 1; k <= n; ++k) {
      CliqueSink collect(CliqueSink::Mode::kCollect);
      const auto result = p.run(k, collect);
      EXPECT_EQ(result.count, p.count(k));
      EXPECT_EQ(collect.stored(), result.count);
      EXPECT_EQ(collect.canonical(), oracle::brute_force_cliques(g, k));

      CliqueSink comm(CliqueSink::Mode::kCollect);
      run_commdeg(g, approx_commdeg_order(g, 0.5).edge_order, k, comm);
      EXPECT_EQ(comm.canonical(), collect.canonical());

      CliqueSink hybrid(CliqueSink::Mode::kCollect);
      run_hybrid(g, k, 0.5, hybrid);
      EXPECT_EQ(hybrid.canonical(), collect.canonical());
    }
  }
}

TEST(Listing, MatrixAndHashPathsAgree) {
  for (int i = 0; i < 30; ++i) {
    const auto g = gen::gnp(40, 0.2 + 0.02 * i, 1700 + i);
    const auto order = degeneracy_order(g).order;
    const Prepared matrix(g, order, {.force = ProbeStrategy::kMatrix});
    const Prepared hash(g, order, {.force = ProbeStrategy::kHash});
    for (int k = 3; k <= 7; ++k) {
      CliqueSink a(CliqueSink::Mode::kCollect), b(CliqueSink::Mode::kCollect);
      const auto ra = matrix.run(k, a);
      const auto rb = hash.run(k, b);
      EXPECT_EQ(a.canonical(), b.canonical());
      EXPECT_EQ(ra.stats.edge_probes, rb.stats.edge_probes);
      EXPECT_EQ(ra.stats.recursive_calls, rb.stats.recursive_calls);
    }
  }
}

TEST(Listing, PruningChangesWorkNotCounts) {
  for (int i = 0; i < 200; i += 5) {
    const auto g = corpus_graph(i);
    const Prepared p(g, degeneracy_order(g).order);
    for (int k = 3; k <= static_cast<int>(g.num_vertices()); ++k) {
      CliqueSink on_sink, off_sink;
      const auto on = p.run(k, on_sink, {.prune = true});
      const auto off = p.run(k, off_sink, {.prune = false});
      EXPECT_EQ(on.count, off.count);
      EXPECT_LE(on.stats.recursive_calls, off.stats.recursive_calls);
      EXPECT_LE(on.stats.edge_probes, off.stats.edge_probes);
      EXPECT_EQ(commdeg_count(g, k, {.prune = false}), on.count);
      EXPECT_EQ(hybrid_count(g, k, {.prune = false}), on.count);
    }
  }
}

TEST(Listing, DepthCap) {
  for (int i = 0; i < 200; i += 11) {
    const auto g = corpus_graph(i);
    const Prepared p(g, degeneracy_order(g).order);
    for (int k = 3; k <= static_cast<int>(g.num_vertices()); ++k) {
      CliqueSink a, b, c;
      EXPECT_LE(p.run(k, a).stats.max_depth, static_cast<std::uint32_t>((k - 2) / 2));
      EXPECT_LE(run_commdeg(g, commdeg_order_greedy(g).edge_order, k, b).stats.max_depth,
                static_cast<std::uint32_t>((k - 2) / 2));
      // the hybrid's top call searches for k - 1 vertices
      EXPECT_LE(run_hybrid(g, k, 0.5, c).stats.max_depth, static_cast<std::uint32_t>((k - 1) / 2));
    }
  }
}

TEST(Listing, ThreadCountDoesNotChangeResults) {
  for (int i = 0; i < 200; i += 9) {
    const auto g = corpus_graph(i);
    const Prepared p(g, degeneracy_order(g).order);
    for (int k = 3; k <= std::min(8, static_cast<int>(g.num_vertices())); ++k) {
      CliqueSink base(CliqueSink::Mode::kCollect);
      const auto reference = p.run(k, base, {.threads = 1});
      for (int threads : {2, 4, 8}) {
        CliqueSink sink(CliqueSink::Mode::kCollect);
        const auto r = p.run(k, sink, {.threads = threads});
        EXPECT_EQ(r.count, reference.count);
        EXPECT_EQ(r.stats.edge_probes, reference.stats.edge_probes);
        EXPECT_EQ(sink.canonical(), base.canonical());
        EXPECT_EQ(commdeg_count(g, k, {.threads = threads}), reference.count);
        EXPECT_EQ(hybrid_count(g, k, {.threads = threads}), reference.count);
      }
    }
  }
}

TEST(CliqueSink, MergeKeepsTallyAndCliques) {
  CliqueSink a(CliqueSink::Mode::kCollect), b(CliqueSink::Mode::kCollect);
  const vertex_t x[] = {3, 1}, y[] = {0, 2};
  a.emit(x);
  b.emit(y);
  a.merge(std::move(b));
  EXPECT_EQ(a.count(), 2u);
  EXPECT_EQ(a.canonical(), (std::vector<std::vector<vertex_t>>{{0, 2}, {1, 3}}));
}

}  // namespace
}  // namespace kclique
