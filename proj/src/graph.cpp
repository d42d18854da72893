#include "kclique/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace kclique {

Graph Graph::from_edges(vertex_t n, std::span<const std::pair<vertex_t, vertex_t>> edges) {
  std::vector<std::pair<vertex_t, vertex_t>> arcs;
  arcs.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DimensionError("edge endpoint out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.neighbors_.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    ++g.offsets_[arcs[i].first + 1];
    g.neighbors_[i] = arcs[i].second;
  }
  for (vertex_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.upper_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (vertex_t u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto upper = nb.end() - std::upper_bound(nb.begin(), nb.end(), u);
    g.upper_offsets_[u + 1] = g.upper_offsets_[u] + static_cast<edge_t>(upper);
  }
  return g;
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<edge_t> Graph::edge_id(vertex_t u, vertex_t v) const {
  if (u > v) std::swap(u, v);
  if (u == v || v >= num_vertices()) return std::nullopt;
  auto nb = neighbors(u);
  auto first_upper = std::upper_bound(nb.begin(), nb.end(), u);
  auto it = std::lower_bound(first_upper, nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return upper_offsets_[u] + static_cast<edge_t>(it - first_upper);
}

std::pair<vertex_t, vertex_t> Graph::edge(edge_t e) const {
  auto it = std::upper_bound(upper_offsets_.begin(), upper_offsets_.end(), e);
  const auto u = static_cast<vertex_t>(it - upper_offsets_.begin() - 1);
  auto nb = neighbors(u);
  auto first_upper = std::upper_bound(nb.begin(), nb.end(), u);
  return {u, *(first_upper + static_cast<std::ptrdiff_t>(e - upper_offsets_[u]))};
}

std::vector<std::pair<vertex_t, vertex_t>> Graph::edges() const {
  std::vector<std::pair<vertex_t, vertex_t>> out;
  out.reserve(num_edges());
  for (vertex_t u = 0; u < num_vertices(); ++u)
    for (vertex_t v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::uint64_t> labels) {
  if (!labels.empty() && labels.size() != num_vertices())
    throw DimensionError("label count does not match vertex count");
  labels_ = std::move(labels);
}

CandidateSet::CandidateSet(std::vector<vertex_t> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i - 1] >= vertices_[i])
      throw ParameterError("candidate set must be strictly increasing");
}

std::optional<std::size_t> CandidateSet::index_of(vertex_t v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t CandidateSet::distance(vertex_t u, vertex_t v) const {
  auto iu = index_of(u);
  auto iv = index_of(v);
  if (!iu || !iv || *iu >= *iv) throw ParameterError("distance needs members u before v");
  return *iv - *iu - 1;
}

vertex_t OrientedGraph::max_out_degree() const {
  vertex_t best = 0;
  for (vertex_t p = 0; p < num_vertices(); ++p) best = std::max(best, out_degree(p));
  return best;
}

std::optional<edge_t> OrientedGraph::find_edge(vertex_t p, vertex_t q) const {
  if (p >= q || q >= num_vertices()) return std::nullopt;
  auto out = out_neighbors(p);
  auto it = std::lower_bound(out.begin(), out.end(), q);
  if (it == out.end() || *it != q) return std::nullopt;
  return out_offsets_[p] + static_cast<edge_t>(it - out.begin());
}

std::optional<vertex_t> OrientedGraph::position(vertex_t original) const {
  auto it = std::lower_bound(by_original_.begin(), by_original_.end(),
                             std::pair<vertex_t, vertex_t>{original, 0});
  if (it == by_original_.end() || it->first != original) return std::nullopt;
  return it->second;
}

Graph OrientedGraph::undirected() const {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(num_edges());
  for (edge_t e = 0; e < num_edges(); ++e) edges.emplace_back(tails_[e], out_[e]);
  return Graph::from_edges(num_vertices(), edges);
}

void OrientedGraph::check_invariants() const {
  const vertex_t n = num_vertices();
  if (out_offsets_.size() != static_cast<std::size_t>(n) + 1 ||
      in_offsets_.size() != static_cast<std::size_t>(n) + 1)
    throw std::logic_error("offset arrays have wrong length");
  if (in_.size() != out_.size() || tails_.size() != out_.size())
    throw std::logic_error("in/out edge counts differ");
  for (vertex_t p = 0; p < n; ++p) {
    auto out = out_neighbors(p);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] <= p) throw std::logic_error("edge not directed low rank to high rank");
      if (i > 0 && out[i - 1] >= out[i]) throw std::logic_error("out-list not sorted");
      if (tails_[out_offsets_[p] + i] != p) throw std::logic_error("tail mismatch");
    }
    auto in = in_neighbors(p);
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i] >= p) throw std::logic_error("in-neighbor ranked after vertex");
      if (i > 0 && in[i - 1] >= in[i]) throw std::logic_error("in-list not sorted");
    }
  }
}

void OrientedGraph::finish() {
  const vertex_t n = num_vertices();
  tails_.resize(out_.size());
  in_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (vertex_t q : out_) ++in_offsets_[q + 1];
  for (vertex_t p = 0; p < n; ++p) in_offsets_[p + 1] += in_offsets_[p];
  in_.resize(out_.size());
  std::vector<edge_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  // tails visited in increasing order, so in-lists come out sorted
  for (vertex_t p = 0; p < n; ++p) {
    for (edge_t e = out_offsets_[p]; e < out_offsets_[p + 1]; ++e) {
      tails_[e] = p;
      in_[cursor[out_[e]]++] = p;
    }
  }
  by_original_.resize(n);
  for (vertex_t p = 0; p < n; ++p) by_original_[p] = {original_[p], p};
  std::sort(by_original_.begin(), by_original_.end());
}

OrientedGraph orient(const Graph& g, const VertexOrder& order) {
  const vertex_t n = g.num_vertices();
  if (order.size() != n) throw DimensionError("order length does not match vertex count");

  OrientedGraph dag;
  dag.original_.resize(n);
  dag.out_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (vertex_t p = 0; p < n; ++p) {
    const auto v = static_cast<vertex_t>(order.at(p));
    dag.original_[p] = v;
    vertex_t out = 0;
    for (vertex_t w : g.neighbors(v))
      if (order.rank(w) > p) ++out;
    dag.out_offsets_[p + 1] = dag.out_offsets_[p] + out;
  }
  dag.out_.resize(g.num_edges());
  for (vertex_t p = 0; p < n; ++p) {
    auto* slot = dag.out_.data() + dag.out_offsets_[p];
    auto* first = slot;
    for (vertex_t w : g.neighbors(dag.original_[p])) {
      const auto q = order.rank(w);
      if (q > p) *slot++ = static_cast<vertex_t>(q);
    }
    std::sort(first, slot);
  }
  dag.finish();
  assert((dag.check_invariants(), true));
  return dag;
}

OrientedGraph induced_subgraph(const OrientedGraph& dag, const CandidateSet& vertices) {
  const auto n = static_cast<vertex_t>(vertices.size());
  OrientedGraph sub;
  sub.original_.resize(n);
  sub.out_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (vertex_t i = 0; i < n; ++i) {
    const vertex_t p = vertices[i];
    sub.original_[i] = dag.original(p);
    // merge out(p) with the members after p
    auto out = dag.out_neighbors(p);
    auto a = out.begin();
    for (vertex_t j = i + 1; j < n && a != out.end(); ++j) {
      a = std::lower_bound(a, out.end(), vertices[j]);
      if (a != out.end() && *a == vertices[j]) sub.out_.push_back(j);
    }
    sub.out_offsets_[i + 1] = sub.out_.size();
  }
  sub.finish();
  assert((sub.check_invariants(), true));
  return sub;
}

}  // namespace kclique
