#include "kclique/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace kclique::gen {

Graph complete(vertex_t n) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph star(vertex_t leaves) {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph hypercube(unsigned d) {
  const auto n = vertex_t{1} << d;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t u = 0; u < n; ++u)
    for (unsigned b = 0; b < d; ++b)
      if (!(u & (vertex_t{1} << b))) edges.emplace_back(u, u | (vertex_t{1} << b));
  return Graph::from_edges(n, edges);
}

Graph k6_minus_edge() {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t u = 0; u < 6; ++u)
    for (vertex_t v = u + 1; v < 6; ++v)
      if (!(u == 2 && v == 3)) edges.emplace_back(u, v);
  return Graph::from_edges(6, edges);
}

Graph gnp(vertex_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double clamped = std::clamp(p, 0.0, 1.0);
  const bool always = clamped >= 1.0;
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(clamped, 64) * (1.0 - 1e-16));
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (rng() < threshold || always) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph collaboration(vertex_t authors, std::uint64_t papers, unsigned max_team, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // every author starts with weight 1 so isolated authors can still be drawn
  std::vector<vertex_t> pool(authors);
  for (vertex_t a = 0; a < authors; ++a) pool[a] = a;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::vector<vertex_t> team;
  for (std::uint64_t p = 0; p < papers; ++p) {
    // team sizes follow a truncated power law starting at 2
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    auto size = static_cast<unsigned>(2.0 / std::sqrt(1.0 - u * (1.0 - 4.0 / (max_team * max_team))));
    size = std::clamp(size, 2u, max_team);
    team.clear();
    while (team.size() < size) {
      const vertex_t a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      if (std::find(team.begin(), team.end(), a) == team.end()) team.push_back(a);
    }
    for (std::size_t i = 0; i < team.size(); ++i) {
      pool.push_back(team[i]);
      for (std::size_t j = i + 1; j < team.size(); ++j) edges.emplace_back(team[i], team[j]);
    }
  }
  return Graph::from_edges(authors, edges);
}

}  // namespace kclique::gen
