#include "kclique/ordering.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace kclique {
namespace {

// Bucket queue over small integer keys with lazy deletion. Each bucket is a
// min-heap so equal keys come out smallest item first. Keys of live items
// only ever decrease by one per extraction, so the cursor steps back at most
// one bucket after each pop.
class BucketQueue {
 public:
  explicit BucketQueue(std::size_t max_key) : buckets_(max_key + 1) {}

  void push(std::size_t key, std::uint64_t item) {
    buckets_[key].push(item);
    cursor_ = std::min(cursor_, key);
  }

  /// Smallest (key, item) for which `current_key(item) == key`.
  template <class KeyOf>
  std::pair<std::size_t, std::uint64_t> pop(KeyOf&& current_key) {
    while (true) {
      while (buckets_[cursor_].empty()) ++cursor_;
      auto& heap = buckets_[cursor_];
      const auto item = heap.top();
      heap.pop();
      if (current_key(item) == cursor_) return {cursor_, item};
    }
  }

 private:
  using MinHeap =
      std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>>;
  std::vector<MinHeap> buckets_;
  std::size_t cursor_ = 0;
};

constexpr std::uint64_t kGone = ~std::uint64_t{0};

void require_positive(double eps) {
  if (!(eps > 0.0)) throw ParameterError("epsilon must be positive");
}

std::uint32_t max_out_degree(const Graph& g, const VertexOrder& order) {
  std::uint32_t best = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    std::uint32_t out = 0;
    for (vertex_t w : g.neighbors(v))
      if (order.rank(w) > order.rank(v)) ++out;
    best = std::max(best, out);
  }
  return best;
}

}  // namespace

DegeneracyResult degeneracy_order(const Graph& g) {
  const vertex_t n = g.num_vertices();
  std::vector<std::uint64_t> degree(n);
  std::size_t max_degree = 0;
  for (vertex_t v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max<std::size_t>(max_degree, degree[v]);
  }
  BucketQueue queue(max_degree);
  for (vertex_t v = 0; v < n; ++v) queue.push(degree[v], v);

  std::vector<std::uint64_t> sequence;
  sequence.reserve(n);
  std::uint32_t s = 0;
  for (vertex_t step = 0; step < n; ++step) {
    auto [d, v] = queue.pop([&](std::uint64_t x) { return degree[x]; });
    s = std::max<std::uint32_t>(s, static_cast<std::uint32_t>(d));
    degree[v] = kGone;
    sequence.push_back(v);
    for (vertex_t w : g.neighbors(static_cast<vertex_t>(v))) {
      if (degree[w] == kGone) continue;
      queue.push(--degree[w], w);
    }
  }
  return {VertexOrder::from_sequence(std::move(sequence)), s};
}

DegeneracyResult approx_degeneracy_order(const Graph& g, double eps) {
  require_positive(eps);
  const vertex_t n = g.num_vertices();
  std::vector<std::uint64_t> degree(n);
  for (vertex_t v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<std::uint32_t> round_of(n, 0);  // 0 = still present

  std::vector<std::uint64_t> sequence;
  sequence.reserve(n);
  std::uint64_t remaining_vertices = n;
  std::uint64_t remaining_edges = g.num_edges();
  std::uint32_t round = 0;
  std::vector<vertex_t> batch;
  while (remaining_vertices > 0) {
    ++round;
    const double limit = (1.0 + eps) * 2.0 * static_cast<double>(remaining_edges);
    batch.clear();
    for (vertex_t v = 0; v < n; ++v)
      if (round_of[v] == 0 &&
          static_cast<double>(degree[v]) * static_cast<double>(remaining_vertices) <= limit)
        batch.push_back(v);
    for (vertex_t v : batch) round_of[v] = round;
    for (vertex_t v : batch) {
      sequence.push_back(v);
      for (vertex_t w : g.neighbors(v)) {
        if (round_of[w] == 0) {
          --degree[w];
          --remaining_edges;
        } else if (round_of[w] == round && v < w) {
          --remaining_edges;
        }
      }
    }
    remaining_vertices -= batch.size();
  }
  auto order = VertexOrder::from_sequence(std::move(sequence));
  const auto bound = max_out_degree(g, order);
  return {std::move(order), bound};
}

TriangleIndex index_triangles(const Graph& g) {
  const auto dag = orient(g, VertexOrder::identity(g.num_vertices()));
  TriangleIndex index;
  for (vertex_t u = 0; u < dag.num_vertices(); ++u) {
    auto out_u = dag.out_neighbors(u);
    for (std::size_t i = 0; i < out_u.size(); ++i) {
      const vertex_t v = out_u[i];
      const edge_t uv = dag.first_edge(u) + i;
      auto out_v = dag.out_neighbors(v);
      std::size_t a = i + 1, b = 0;
      while (a < out_u.size() && b < out_v.size()) {
        if (out_u[a] < out_v[b]) {
          ++a;
        } else if (out_v[b] < out_u[a]) {
          ++b;
        } else {
          index.triangles.push_back({uv, dag.first_edge(u) + a, dag.first_edge(v) + b});
          ++a;
          ++b;
        }
      }
    }
  }
  const edge_t m = g.num_edges();
  index.offsets.assign(m + 1, 0);
  for (const auto& t : index.triangles)
    for (edge_t e : t) ++index.offsets[e + 1];
  for (edge_t e = 0; e < m; ++e) index.offsets[e + 1] += index.offsets[e];
  index.incident.resize(index.offsets[m]);
  std::vector<std::uint64_t> cursor(index.offsets.begin(), index.offsets.end() - 1);
  for (std::uint64_t t = 0; t < index.triangles.size(); ++t)
    for (edge_t e : index.triangles[t]) index.incident[cursor[e]++] = t;
  return index;
}

CommDegResult commdeg_order_greedy(const Graph& g) {
  const edge_t m = g.num_edges();
  const auto tri = index_triangles(g);
  std::vector<std::uint64_t> count(m);
  std::size_t max_count = 0;
  for (edge_t e = 0; e < m; ++e) {
    count[e] = tri.of_edge(e).size();
    max_count = std::max<std::size_t>(max_count, count[e]);
  }
  std::vector<char> triangle_alive(tri.triangles.size(), 1);
  BucketQueue queue(max_count);
  for (edge_t e = 0; e < m; ++e) queue.push(count[e], e);

  std::vector<std::uint64_t> sequence;
  sequence.reserve(m);
  std::uint32_t sigma = 0;
  for (edge_t step = 0; step < m; ++step) {
    auto [c, e] = queue.pop([&](std::uint64_t x) { return count[x]; });
    sigma = std::max<std::uint32_t>(sigma, static_cast<std::uint32_t>(c));
    count[e] = kGone;
    sequence.push_back(e);
    for (auto t : tri.of_edge(e)) {
      if (!triangle_alive[t]) continue;
      triangle_alive[t] = 0;
      for (edge_t f : tri.triangles[t])
        if (f != e) queue.push(--count[f], f);
    }
  }
  return {EdgeOrder::from_sequence(std::move(sequence)), sigma, 0};
}

CommDegResult approx_commdeg_order(const Graph& g, double eps) {
  require_positive(eps);
  const edge_t m = g.num_edges();
  const auto tri = index_triangles(g);
  std::vector<std::uint64_t> count(m);
  for (edge_t e = 0; e < m; ++e) count[e] = tri.of_edge(e).size();
  std::vector<char> triangle_alive(tri.triangles.size(), 1);
  std::vector<char> removed(m, 0);

  std::vector<std::uint64_t> sequence;
  sequence.reserve(m);
  std::uint64_t remaining_triangles = tri.triangles.size();
  std::uint64_t remaining_edges = m;
  CommDegResult result;
  std::vector<edge_t> batch;
  while (remaining_edges > 0) {
    ++result.rounds;
    const double limit = (3.0 + eps) * static_cast<double>(remaining_triangles);
    batch.clear();
    for (edge_t e = 0; e < m; ++e)
      if (!removed[e] &&
          static_cast<double>(count[e]) * static_cast<double>(remaining_edges) <= limit)
        batch.push_back(e);
    for (edge_t e : batch) {
      removed[e] = 1;
      result.sigma = std::max<std::uint32_t>(result.sigma, static_cast<std::uint32_t>(count[e]));
      sequence.push_back(e);
    }
    for (edge_t e : batch) {
      for (auto t : tri.of_edge(e)) {
        if (!triangle_alive[t]) continue;
        triangle_alive[t] = 0;
        --remaining_triangles;
        for (edge_t f : tri.triangles[t])
          if (!removed[f]) --count[f];
      }
    }
    remaining_edges -= batch.size();
  }
  result.edge_order = EdgeOrder::from_sequence(std::move(sequence));
  return result;
}

}  // namespace kclique
