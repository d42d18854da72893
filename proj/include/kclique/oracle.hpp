#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "kclique/graph.hpp"

// Exhaustive reference implementations for testing. They read the input
// Graph's edge list once into their own adjacency form and share nothing else
// with the engine. Slow on purpose.
namespace kclique::oracle {

/// The input is too large for an exhaustive method.
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr vertex_t kMaxCliqueVertices = 30;

/// Every k-vertex subset that is complete, each sorted, in lexicographic
/// order. Throws RefusedError if n > 30.
std::vector<std::vector<vertex_t>> brute_force_cliques(const Graph& g, int k);

/// counts[k] = number of k-cliques, for k = 0..n (counts[0] = 1), from a scan
/// over all 2^n vertex subsets. Throws RefusedError if n > 30.
std::vector<std::uint64_t> clique_counts(const Graph& g);

/// Greedy peeling that recomputes every degree from scratch at each step.
std::uint32_t exact_degeneracy(const Graph& g);
/// Greedy edge peeling that recomputes every triangle count from scratch.
std::uint32_t exact_community_degeneracy(const Graph& g);

/// max over vertex subsets S of the minimum degree in G[S]. n <= 20.
std::uint32_t definitional_degeneracy(const Graph& g);
/// max over non-empty edge subsets F of min over e in F of the number of
/// triangles of (V, F) containing e. m <= 20.
std::uint32_t definitional_community_degeneracy(const Graph& g);

/// Number of vertex triples that are complete.
std::uint64_t triangle_count(const Graph& g);

/// Pairs (i, j), i < j < size, with at least c indices strictly between.
std::uint64_t brute_force_relevant_pairs(std::size_t size, std::size_t c);

/// Maximum out-degree when every edge points from the earlier to the later
/// vertex of `vertex_sequence` (first to last).
std::uint32_t max_out_degree(const Graph& g, std::span<const std::uint64_t> vertex_sequence);

/// Over all edges e, the largest number of vertices w such that both {u, w}
/// and {w, v} come after e = {u, v} in `edge_sequence`, given as canonical
/// edge ids (Graph::edge) first to last.
std::uint32_t max_restricted_community(const Graph& g,
                                       std::span<const std::uint64_t> edge_sequence);

struct OracleReport {
  std::vector<std::uint64_t> clique_counts;  // index k; empty when n > 30
  std::uint32_t degeneracy = 0;
  std::uint32_t community_degeneracy = 0;
  std::uint64_t triangle_count = 0;
};

OracleReport report(const Graph& g);

}  // namespace kclique::oracle
