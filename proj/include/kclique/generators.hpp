#pragma once

#include <cstdint>

#include "kclique/graph.hpp"

// Deterministic graph families used by tests, benchmarks and the CLI.
namespace kclique::gen {

Graph complete(vertex_t n);
/// Star with `leaves` leaves; the center is vertex 0.
Graph star(vertex_t leaves);
/// d-dimensional hypercube on 2^d vertices.
Graph hypercube(unsigned d);
/// K6 without the edge {2, 3}: two 5-cliques, no 6-clique.
Graph k6_minus_edge();
/// Erdos-Renyi G(n, p). Each pair u < v is kept when the next 64-bit output of
/// mt19937_64(seed) is below p * 2^64, so results are platform independent.
Graph gnp(vertex_t n, double p, std::uint64_t seed);
/// Co-authorship style graph: `papers` teams of 2..max_team authors drawn with
/// preferential attachment among `authors` vertices; every team is a clique.
Graph collaboration(vertex_t authors, std::uint64_t papers, unsigned max_team, std::uint64_t seed);

}  // namespace kclique::gen
