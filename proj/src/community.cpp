#include "kclique/community.hpp"

#include <algorithm>
#include <numeric>

namespace kclique {
namespace {

std::uint64_t pair_key(vertex_t u, vertex_t v) { return (std::uint64_t{u} << 32) | v; }

// Calls f(w) for every common element of two sorted ranges.
template <class F>
void merge_common(std::span<const vertex_t> a, std::span<const vertex_t> b, F&& f) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      f(a[i]);
      ++i;
      ++j;
    }
  }
}

std::uint64_t matrix_words(std::uint64_t size) { return size * ((size + 63) / 64); }

}  // namespace

CommunityStore build_communities(const OrientedGraph& dag) {
  const edge_t m = dag.num_edges();
  const auto n = static_cast<std::int64_t>(dag.num_vertices());
  CommunityStore store;
  store.offsets_.assign(m + 1, 0);

  // out(u) ∩ in(v) restricted to ranks between u and v
  auto community = [&](vertex_t u, vertex_t v, auto&& f) {
    auto out = dag.out_neighbors(u);
    auto in = dag.in_neighbors(v);
    auto first = std::upper_bound(in.begin(), in.end(), u);
    auto last = std::lower_bound(out.begin(), out.end(), v);
    merge_common(out.subspan(0, static_cast<std::size_t>(last - out.begin())),
                 in.subspan(static_cast<std::size_t>(first - in.begin())), f);
  };

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t u = 0; u < n; ++u) {
    const auto p = static_cast<vertex_t>(u);
    for (edge_t e = dag.first_edge(p); e < dag.first_edge(p) + dag.out_degree(p); ++e) {
      std::uint64_t size = 0;
      community(p, dag.head(e), [&](vertex_t) { ++size; });
      store.offsets_[e + 1] = size;
    }
  }
  for (edge_t e = 0; e < m; ++e) {
    store.max_size_ = std::max<std::uint32_t>(store.max_size_,
                                               static_cast<std::uint32_t>(store.offsets_[e + 1]));
    store.offsets_[e + 1] += store.offsets_[e];
  }
  store.members_.resize(store.offsets_[m]);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t u = 0; u < n; ++u) {
    const auto p = static_cast<vertex_t>(u);
    for (edge_t e = dag.first_edge(p); e < dag.first_edge(p) + dag.out_degree(p); ++e) {
      auto* slot = store.members_.data() + store.offsets_[e];
      community(p, dag.head(e), [&](vertex_t w) { *slot++ = w; });
    }
  }
  return store;
}

std::uint64_t count_triangles(const Graph& g) {
  // orient by (degree, id) so every out-list is short
  std::vector<std::uint64_t> seq(g.num_vertices());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), [&](std::uint64_t a, std::uint64_t b) {
    const auto da = g.degree(static_cast<vertex_t>(a));
    const auto db = g.degree(static_cast<vertex_t>(b));
    return da != db ? da < db : a < b;
  });
  const auto dag = orient(g, VertexOrder::from_sequence(std::move(seq)));
  const auto n = static_cast<std::int64_t>(dag.num_vertices());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::int64_t u = 0; u < n; ++u) {
    auto out = dag.out_neighbors(static_cast<vertex_t>(u));
    for (vertex_t v : out) merge_common(out, dag.out_neighbors(v), [&](vertex_t) { ++total; });
  }
  return total;
}

std::vector<vertex_t> restricted_community(const Graph& g, edge_t e, const EdgeOrder& order) {
  const auto [u, v] = g.edge(e);
  const auto after = order.rank(e);
  std::vector<vertex_t> out;
  merge_common(g.neighbors(u), g.neighbors(v), [&](vertex_t w) {
    if (order.rank(*g.edge_id(u, w)) > after && order.rank(*g.edge_id(w, v)) > after)
      out.push_back(w);
  });
  return out;
}

bool EdgeProbe::probe(edge_t scope, vertex_t u, vertex_t v) const {
  if (strategy_ == ProbeStrategy::kHash) return pairs_.contains(pair_key(u, v));
  const auto members = store_->members(scope);
  auto iu = std::lower_bound(members.begin(), members.end(), u);
  auto iv = std::lower_bound(members.begin(), members.end(), v);
  if (iu == members.end() || *iu != u || iv == members.end() || *iv != v) return false;
  return matrix(scope).test(static_cast<std::uint32_t>(iu - members.begin()),
                            static_cast<std::uint32_t>(iv - members.begin()));
}

std::optional<edge_t> EdgeProbe::find(vertex_t u, vertex_t v) const {
  if (strategy_ == ProbeStrategy::kMatrix) return dag_->find_edge(u, v);
  auto it = pairs_.find(pair_key(u, v));
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

BitMatrixView EdgeProbe::matrix(edge_t scope) const {
  const auto size = static_cast<std::uint32_t>(store_->size(scope));
  return {matrix_words_.data() + matrix_offsets_[scope], size, (size + 63) / 64};
}

std::uint64_t EdgeProbe::memory_bytes() const {
  return matrix_words_.size() * sizeof(std::uint64_t) +
         matrix_offsets_.size() * sizeof(std::uint64_t) +
         pairs_.size() * (sizeof(std::uint64_t) + sizeof(edge_t) + 2 * sizeof(void*));
}

EdgeProbe build_probe(const OrientedGraph& dag, const CommunityStore& store, std::uint32_t gamma,
                      const ProbeConfig& config) {
  EdgeProbe probe;
  probe.dag_ = &dag;
  probe.store_ = &store;
  const edge_t m = dag.num_edges();

  std::uint64_t words = 0;
  for (edge_t e = 0; e < m; ++e) words += matrix_words(store.size(e));
  const bool fits = gamma <= config.gamma_threshold &&
                    words * sizeof(std::uint64_t) <= config.max_matrix_bytes;
  probe.strategy_ = config.force.value_or(fits ? ProbeStrategy::kMatrix : ProbeStrategy::kHash);

  if (probe.strategy_ == ProbeStrategy::kHash) {
    probe.pairs_.reserve(m);
    for (edge_t e = 0; e < m; ++e) probe.pairs_.emplace(pair_key(dag.tail(e), dag.head(e)), e);
    return probe;
  }

  probe.matrix_offsets_.assign(m + 1, 0);
  for (edge_t e = 0; e < m; ++e)
    probe.matrix_offsets_[e + 1] = probe.matrix_offsets_[e] + matrix_words(store.size(e));
  probe.matrix_words_.assign(probe.matrix_offsets_[m], 0);

  const auto edges = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t x = 0; x < edges; ++x) {
    const auto e = static_cast<edge_t>(x);
    const auto members = store.members(e);
    if (members.size() < 2) continue;
    const auto stride = (members.size() + 63) / 64;
    auto* words_e = probe.matrix_words_.data() + probe.matrix_offsets_[e];
    for (std::size_t i = 0; i < members.size(); ++i) {
      // local index j of every out-neighbor of members[i] inside C(e)
      auto out = dag.out_neighbors(members[i]);
      std::size_t j = i + 1, a = 0;
      while (j < members.size() && a < out.size()) {
        if (members[j] < out[a]) {
          ++j;
        } else if (out[a] < members[j]) {
          ++a;
        } else {
          words_e[i * stride + (j >> 6)] |= std::uint64_t{1} << (j & 63);
          ++j;
          ++a;
        }
      }
    }
  }
  return probe;
}

}  // namespace kclique
