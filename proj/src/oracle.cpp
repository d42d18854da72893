#include "kclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>

namespace kclique::oracle {
namespace {

// Dense adjacency matrix, the oracle's own representation.
class Dense {
 public:
  explicit Dense(const Graph& g) : n_(g.num_vertices()), adj_(std::size_t{n_} * n_, 0) {
    for (vertex_t u = 0; u < n_; ++u)
      for (vertex_t v : g.neighbors(u)) adj_[std::size_t{u} * n_ + v] = 1;
  }
  vertex_t n() const { return n_; }
  bool adjacent(vertex_t u, vertex_t v) const { return adj_[std::size_t{u} * n_ + v] != 0; }
  std::vector<std::pair<vertex_t, vertex_t>> edges() const {
    std::vector<std::pair<vertex_t, vertex_t>> out;
    for (vertex_t u = 0; u < n_; ++u)
      for (vertex_t v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }
  // Row masks; only valid for n <= 64.
  std::vector<std::uint64_t> rows() const {
    std::vector<std::uint64_t> out(n_, 0);
    for (vertex_t u = 0; u < n_; ++u)
      for (vertex_t v = 0; v < n_; ++v)
        if (adjacent(u, v)) out[u] |= std::uint64_t{1} << v;
    return out;
  }

 private:
  vertex_t n_;
  std::vector<char> adj_;
};

void refuse_above(std::uint64_t value, std::uint64_t limit, const char* what) {
  if (value > limit)
    throw RefusedError(std::string(what) + " " + std::to_string(value) + " exceeds oracle limit " +
                       std::to_string(limit));
}

}  // namespace

std::vector<std::vector<vertex_t>> brute_force_cliques(const Graph& g, int k) {
  refuse_above(g.num_vertices(), kMaxCliqueVertices, "vertex count");
  if (k < 0) throw ParameterError("k must be non-negative");
  const Dense dense(g);
  const auto n = dense.n();
  const auto rows = dense.rows();
  std::vector<std::vector<vertex_t>> out;
  if (static_cast<vertex_t>(k) > n) return out;
  if (k == 0) return {{}};

  const std::uint64_t limit = std::uint64_t{1} << n;
  // Gosper's hack: every k-subset of [0, n) as a bit mask
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
    bool complete = true;
    for (std::uint64_t rest = mask; rest && complete; rest &= rest - 1) {
      const auto v = std::countr_zero(rest);
      complete = (mask & ~(std::uint64_t{1} << v) & ~rows[v]) == 0;
    }
    if (complete) {
      std::vector<vertex_t> clique;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        clique.push_back(static_cast<vertex_t>(std::countr_zero(rest)));
      out.push_back(std::move(clique));
    }
    const std::uint64_t low = mask & -mask;
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> clique_counts(const Graph& g) {
  refuse_above(g.num_vertices(), kMaxCliqueVertices, "vertex count");
  const Dense dense(g);
  const auto n = dense.n();
  const auto rows = dense.rows();
  std::vector<std::uint64_t> counts(n + 1, 0);
  // complete[S] = complete[S minus its lowest vertex] and that vertex sees the rest
  std::vector<bool> complete(std::size_t{1} << n, false);
  complete[0] = true;
  counts[0] = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto low = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    if (complete[rest] && (rest & ~rows[low]) == 0) {
      complete[mask] = true;
      ++counts[std::popcount(mask)];
    }
  }
  return counts;
}

std::uint32_t exact_degeneracy(const Graph& g) {
  const Dense dense(g);
  const auto n = dense.n();
  const auto edges = dense.edges();
  std::vector<char> alive(n, 1);
  std::uint32_t best = 0;
  for (vertex_t step = 0; step < n; ++step) {
    std::vector<std::uint32_t> degree(n, 0);
    for (auto [u, v] : edges)
      if (alive[u] && alive[v]) ++degree[u], ++degree[v];
    vertex_t pick = n;
    for (vertex_t v = 0; v < n; ++v)
      if (alive[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    best = std::max(best, degree[pick]);
    alive[pick] = 0;
  }
  return best;
}

std::uint32_t exact_community_degeneracy(const Graph& g) {
  Dense dense(g);
  const auto n = dense.n();
  auto edges = dense.edges();
  std::vector<char> adj(std::size_t{n} * n, 0);
  for (auto [u, v] : edges) adj[std::size_t{u} * n + v] = adj[std::size_t{v} * n + u] = 1;
  std::uint32_t best = 0;
  while (!edges.empty()) {
    std::size_t pick = 0;
    std::uint32_t pick_count = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [u, v] = edges[i];
      std::uint32_t count = 0;
      for (vertex_t w = 0; w < n; ++w)
        count += adj[std::size_t{u} * n + w] && adj[std::size_t{v} * n + w];
      if (count < pick_count) pick = i, pick_count = count;
    }
    best = std::max(best, pick_count);
    const auto [u, v] = edges[pick];
    adj[std::size_t{u} * n + v] = adj[std::size_t{v} * n + u] = 0;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return best;
}

std::uint32_t definitional_degeneracy(const Graph& g) {
  refuse_above(g.num_vertices(), 20, "vertex count");
  const Dense dense(g);
  const auto n = dense.n();
  const auto rows = dense.rows();
  std::uint32_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint32_t low = std::numeric_limits<std::uint32_t>::max();
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const auto v = std::countr_zero(rest);
      low = std::min<std::uint32_t>(low, std::popcount(rows[v] & mask));
    }
    best = std::max(best, low);
  }
  return best;
}

std::uint32_t definitional_community_degeneracy(const Graph& g) {
  const Dense dense(g);
  const auto edges = dense.edges();
  refuse_above(edges.size(), 20, "edge count");
  const auto n = dense.n();
  std::map<std::pair<vertex_t, vertex_t>, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
  auto id = [&](vertex_t a, vertex_t b) { return index.at({std::min(a, b), std::max(a, b)}); };

  std::uint32_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    auto in = [&](vertex_t a, vertex_t b) {
      return dense.adjacent(a, b) && ((mask >> id(a, b)) & 1);
    };
    std::uint32_t low = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!((mask >> i) & 1)) continue;
      const auto [u, v] = edges[i];
      std::uint32_t count = 0;
      for (vertex_t w = 0; w < n; ++w)
        if (w != u && w != v && in(u, w) && in(w, v)) ++count;
      low = std::min(low, count);
    }
    best = std::max(best, low);
  }
  return best;
}

std::uint64_t triangle_count(const Graph& g) {
  const Dense dense(g);
  const auto n = dense.n();
  std::uint64_t count = 0;
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b = a + 1; b < n; ++b)
      if (dense.adjacent(a, b))
        for (vertex_t c = b + 1; c < n; ++c)
          if (dense.adjacent(a, c) && dense.adjacent(b, c)) ++count;
  return count;
}

std::uint64_t brute_force_relevant_pairs(std::size_t size, std::size_t c) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (j - i - 1 >= c) ++count;
  return count;
}

std::uint32_t max_out_degree(const Graph& g, std::span<const std::uint64_t> vertex_sequence) {
  const Dense dense(g);
  const auto n = dense.n();
  if (vertex_sequence.size() != n) throw DimensionError("vertex sequence length mismatch");
  std::vector<std::uint64_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[vertex_sequence[p]] = p;
  std::vector<std::uint32_t> out(n, 0);
  for (auto [u, v] : dense.edges()) ++out[position[u] < position[v] ? u : v];
  return n == 0 ? 0 : *std::max_element(out.begin(), out.end());
}

std::uint32_t max_restricted_community(const Graph& g,
                                       std::span<const std::uint64_t> edge_sequence) {
  const Dense dense(g);
  const auto n = dense.n();
  const auto edges = dense.edges();
  if (edge_sequence.size() != edges.size()) throw DimensionError("edge sequence length mismatch");
  // edges() enumerates (u, v), u < v, lexicographically: the canonical ids
  std::vector<std::uint64_t> when(std::size_t{n} * n, 0);
  for (std::size_t p = 0; p < edge_sequence.size(); ++p) {
    const auto [u, v] = edges.at(edge_sequence[p]);
    when[std::size_t{u} * n + v] = when[std::size_t{v} * n + u] = p;
  }
  std::uint32_t best = 0;
  for (auto [u, v] : edges) {
    const auto t = when[std::size_t{u} * n + v];
    std::uint32_t count = 0;
    for (vertex_t w = 0; w < n; ++w)
      if (dense.adjacent(u, w) && dense.adjacent(w, v) && when[std::size_t{u} * n + w] > t &&
          when[std::size_t{w} * n + v] > t)
        ++count;
    best = std::max(best, count);
  }
  return best;
}

OracleReport report(const Graph& g) {
  OracleReport r;
  if (g.num_vertices() <= kMaxCliqueVertices) r.clique_counts = clique_counts(g);
  r.degeneracy = exact_degeneracy(g);
  r.community_degeneracy = exact_community_degeneracy(g);
  r.triangle_count = triangle_count(g);
  return r;
}

}  // namespace kclique::oracle
