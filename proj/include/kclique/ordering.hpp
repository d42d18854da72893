#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "kclique/graph.hpp"

namespace kclique {

/// A vertex order and the out-degree bound it achieves.
///
/// For `degeneracy_order`, `s` is the degeneracy. For the approximate order it
/// is the maximum out-degree observed after orienting by `order`.
struct DegeneracyResult {
  VertexOrder order;
  std::uint32_t s = 0;
};

/// An order on the canonical edges of a graph (see Graph::edge_id).
///
/// `sigma` is the largest number of triangles an edge still had when it was
/// taken out. For the greedy order this is the community degeneracy; for the
/// round-based order it bounds every restricted community from above.
struct CommDegResult {
  EdgeOrder edge_order;
  std::uint32_t sigma = 0;
  std::uint32_t rounds = 0;  // peeling rounds (round-based order only)
};

/// Greedy minimum-degree peeling with a bucket queue, ties to the smallest id.
DegeneracyResult degeneracy_order(const Graph& g);

/// Round-based peeling: each round removes every vertex whose remaining degree
/// is at most (1 + eps) times the remaining average degree, in id order.
/// Orienting by the result gives out-degree at most (2 + 2 eps) s.
/// Throws ParameterError unless eps > 0.
DegeneracyResult approx_degeneracy_order(const Graph& g, double eps);

/// Repeatedly removes an edge in the fewest remaining triangles (smallest id
/// on ties).
CommDegResult commdeg_order_greedy(const Graph& g);

/// Round-based edge peeling: each round removes all edges contained in at most
/// (3 + eps) T / m remaining triangles, where T and m are the remaining
/// triangle and edge counts. Throws ParameterError unless eps > 0.
CommDegResult approx_commdeg_order(const Graph& g, double eps);

/// Triangles of `g` as canonical edge-id triples, plus the edge -> triangle
/// incidence in CSR form.
struct TriangleIndex {
  std::vector<std::array<edge_t, 3>> triangles;
  std::vector<std::uint64_t> offsets;  // per edge, into `incident`
  std::vector<std::uint64_t> incident;

  std::span<const std::uint64_t> of_edge(edge_t e) const {
    return {incident.data() + offsets[e], incident.data() + offsets[e + 1]};
  }
};
TriangleIndex index_triangles(const Graph& g);

}  // namespace kclique
