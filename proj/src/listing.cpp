#include "kclique/listing.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>

namespace kclique {

void CliqueSink::emit(std::span<const vertex_t> clique) {
  ++count_;
  if (!collecting()) return;
  width_ = clique.size();
  buffer_.insert(buffer_.end(), clique.begin(), clique.end());
}

void CliqueSink::merge(CliqueSink&& other) {
  count_ += other.count_;
  if (other.width_ != 0) width_ = other.width_;
  buffer_.insert(buffer_.end(), other.buffer_.begin(), other.buffer_.end());
  other = CliqueSink(other.mode_);
}

std::vector<std::vector<vertex_t>> CliqueSink::canonical() const {
  std::vector<std::vector<vertex_t>> out;
  out.reserve(stored());
  for (std::size_t i = 0; i < stored(); ++i) {
    auto c = clique(i);
    out.emplace_back(c.begin(), c.end());
    std::sort(out.back().begin(), out.back().end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SearchStats::merge(const SearchStats& other) {
  recursive_calls += other.recursive_calls;
  edge_probes += other.edge_probes;
  intersections += other.intersections;
  listed_cliques += other.listed_cliques;
  max_depth = std::max(max_depth, other.max_depth);
}

std::uint64_t relevant_pair_count(std::size_t size, std::size_t c) {
  if (size <= c + 1) return 0;
  const std::uint64_t r = size - c;
  return r * (r - 1) / 2;
}

RelevantPairs::iterator RelevantPairs::begin() const {
  if (gap_ >= size_) return end();
  return {size_, gap_, 0, gap_};
}

RelevantPairs::iterator& RelevantPairs::iterator::operator++() {
  if (++j_ < size_) return *this;
  ++i_;
  j_ = i_ + gap_;
  if (j_ >= size_) i_ = j_ = size_;
  return *this;
}

namespace {

using item_t = std::uint32_t;

// Candidates are local indices into one community whose adjacency is a bit
// matrix; index order is rank order.
struct MatrixFrame {
  BitMatrixView adj;
  std::span<const vertex_t> members;    // local index -> vertex
  std::span<const vertex_t> originals;  // vertex -> root id; empty = identity

  vertex_t label(item_t i) const {
    return originals.empty() ? members[i] : originals[members[i]];
  }
  std::optional<edge_t> edge(item_t a, item_t b) const {
    if (!adj.test(a, b)) return std::nullopt;
    return edge_t{0};
  }
  void intersect(edge_t, item_t a, item_t b, std::span<const item_t> between,
                 std::vector<item_t>& out) const {
    for (item_t w : between)
      if (adj.test(a, w) && adj.test(w, b)) out.push_back(w);
  }
};

// Candidates are dag positions; probes go through EdgeProbe::find and
// intersections merge with the stored community.
struct GlobalFrame {
  const CommunityStore* store;
  const EdgeProbe* probe;
  std::span<const vertex_t> originals;

  vertex_t label(item_t p) const { return originals[p]; }
  std::optional<edge_t> edge(item_t a, item_t b) const { return probe->find(a, b); }
  void intersect(edge_t e, item_t, item_t, std::span<const item_t> between,
                 std::vector<item_t>& out) const {
    const auto members = store->members(e);
    std::size_t i = 0, j = 0;
    while (i < between.size() && j < members.size()) {
      if (between[i] < members[j]) {
        ++i;
      } else if (members[j] < between[i]) {
        ++j;
      } else {
        out.push_back(between[i]);
        ++i;
        ++j;
      }
    }
  }
};

template <class Frame>
class Search {
 public:
  Search(const Frame& frame, const ListingOptions& options, CliqueSink& sink, SearchStats& stats,
         int c)
      : frame_(frame), options_(options), sink_(sink), stats_(stats),
        scratch_(static_cast<std::size_t>(c) / 2 + 2) {}

  // Labels of the vertices already fixed, outermost first.
  std::vector<vertex_t>& clique() { return clique_; }

  void run(std::span<const item_t> I, int c, std::uint32_t level) {
    ++stats_.recursive_calls;
    if (c == 1) {
      stats_.listed_cliques += I.size();
      if (!sink_.collecting()) {
        sink_.add_count(I.size());
        return;
      }
      for (item_t v : I) {
        clique_.push_back(frame_.label(v));
        sink_.emit(clique_);
        clique_.pop_back();
      }
      return;
    }
    stats_.max_depth = std::max(stats_.max_depth, level);
    const std::size_t n = I.size();
    if (c == 2) {
      stats_.edge_probes += n * (n - (n > 0)) / 2;
      std::uint64_t found = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!frame_.edge(I[i], I[j])) continue;
          ++found;
          if (!sink_.collecting()) continue;
          clique_.push_back(frame_.label(I[i]));
          clique_.push_back(frame_.label(I[j]));
          sink_.emit(clique_);
          clique_.resize(clique_.size() - 2);
        }
      }
      stats_.listed_cliques += found;
      if (!sink_.collecting()) sink_.add_count(found);
      return;
    }
    // j - i - 1 >= c - 2 keeps only pairs with room for the rest between them
    const std::size_t min_gap = options_.prune ? static_cast<std::size_t>(c) - 1 : 1;
    auto& next = scratch_[level];
    for (std::size_t i = 0; i + min_gap < n; ++i) {
      for (std::size_t j = i + min_gap; j < n; ++j) {
        ++stats_.edge_probes;
        const auto e = frame_.edge(I[i], I[j]);
        if (!e) continue;
        ++stats_.intersections;
        next.clear();
        frame_.intersect(*e, I[i], I[j], I.subspan(i + 1, j - i - 1), next);
        clique_.push_back(frame_.label(I[i]));
        clique_.push_back(frame_.label(I[j]));
        run(next, c - 2, level + 1);
        clique_.resize(clique_.size() - 2);
      }
    }
  }

 private:
  const Frame& frame_;
  const ListingOptions& options_;
  CliqueSink& sink_;
  SearchStats& stats_;
  std::vector<vertex_t> clique_;
  std::vector<std::vector<item_t>> scratch_;  // one candidate buffer per level
};

void require_k(int k) {
  if (k < 1) throw ParameterError("k must be at least 1");
}

int thread_count(const ListingOptions& options) {
  return options.threads > 0 ? options.threads : omp_get_max_threads();
}

// Runs body(task, sink, stats) for every task in [0, tasks) in parallel with
// per-thread sinks and counters, then merges them into `sink`.
template <class Body>
ListingResult parallel_tasks(std::uint64_t tasks, CliqueSink& sink,
                             const ListingOptions& options, Body&& body) {
  const int threads = thread_count(options);
  std::vector<CliqueSink> sinks(static_cast<std::size_t>(threads), CliqueSink(sink.mode()));
  std::vector<SearchStats> stats(static_cast<std::size_t>(threads));
  const auto n = static_cast<std::int64_t>(tasks);
#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t x = 0; x < n; ++x) body(static_cast<std::uint64_t>(x), sinks[t], stats[t]);
  }
  ListingResult result;
  const auto before = sink.count();
  for (std::size_t t = 0; t < sinks.size(); ++t) {
    sink.merge(std::move(sinks[t]));
    result.stats.merge(stats[t]);
  }
  result.count = sink.count() - before;
  return result;
}

// k = 1 and k = 2 need no search.
ListingResult list_small(const Graph& g, std::span<const vertex_t> originals, int k,
                         CliqueSink& sink) {
  auto label = [&](vertex_t v) { return originals.empty() ? v : originals[v]; };
  ListingResult result;
  if (k == 1) {
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
      const vertex_t c[1] = {label(v)};
      sink.emit(c);
    }
    result.count = g.num_vertices();
  } else {
    for (auto [u, v] : g.edges()) {
      const vertex_t c[2] = {label(u), label(v)};
      sink.emit(c);
    }
    result.count = g.num_edges();
  }
  result.stats.listed_cliques = result.count;
  return result;
}

ListingResult list_small(const OrientedGraph& dag, int k, CliqueSink& sink) {
  ListingResult result;
  if (k == 1) {
    for (vertex_t p = 0; p < dag.num_vertices(); ++p) {
      const vertex_t c[1] = {dag.original(p)};
      sink.emit(c);
    }
    result.count = dag.num_vertices();
  } else {
    for (edge_t e = 0; e < dag.num_edges(); ++e) {
      const vertex_t c[2] = {dag.original(dag.tail(e)), dag.original(dag.head(e))};
      sink.emit(c);
    }
    result.count = dag.num_edges();
  }
  result.stats.listed_cliques = result.count;
  return result;
}

}  // namespace

void recursive_count(const OrientedGraph& dag, const CommunityStore& store, const EdgeProbe& probe,
                     const CandidateSet& I, int c, std::span<const vertex_t> prefix,
                     CliqueSink& sink, SearchStats& stats, const ListingOptions& options) {
  if (c < 1) throw ParameterError("c must be at least 1");
  const GlobalFrame frame{&store, &probe, dag.originals()};
  Search<GlobalFrame> search(frame, options, sink, stats, c);
  for (vertex_t p : prefix) search.clique().push_back(dag.original(p));
  search.run(I.vertices(), c, 1);
}

ListingResult run_degeneracy(const OrientedGraph& dag, const CommunityStore& store,
                             const EdgeProbe& probe, int k, CliqueSink& sink,
                             const ListingOptions& options) {
  require_k(k);
  if (k <= 2) return list_small(dag, k, sink);
  const auto need = static_cast<std::size_t>(k - 2);
  const bool matrices = probe.strategy() == ProbeStrategy::kMatrix;

  return parallel_tasks(dag.num_edges(), sink, options,
                        [&](edge_t e, CliqueSink& local, SearchStats& stats) {
    const auto members = store.members(e);
    if (members.size() < need) return;
    auto start = [&](auto& search) {
      search.clique().push_back(dag.original(dag.tail(e)));
      search.clique().push_back(dag.original(dag.head(e)));
    };
    if (matrices) {
      const MatrixFrame frame{probe.matrix(e), members, dag.originals()};
      std::vector<item_t> all(members.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<item_t>(i);
      Search<MatrixFrame> search(frame, options, local, stats, k - 2);
      start(search);
      search.run(all, k - 2, 1);
    } else {
      const GlobalFrame frame{&store, &probe, dag.originals()};
      Search<GlobalFrame> search(frame, options, local, stats, k - 2);
      start(search);
      search.run(members, k - 2, 1);
    }
  });
}

ListingResult run_commdeg(const Graph& g, const EdgeOrder& edge_order, int k, CliqueSink& sink,
                          const ListingOptions& options) {
  require_k(k);
  if (edge_order.size() != g.num_edges())
    throw DimensionError("edge order length does not match edge count");
  if (k <= 2) return list_small(g, {}, k, sink);
  const auto need = static_cast<std::size_t>(k - 2);

  return parallel_tasks(g.num_edges(), sink, options,
                        [&](edge_t e, CliqueSink& local, SearchStats& stats) {
    const auto members = restricted_community(g, e, edge_order);
    if (members.size() < need) return;
    // G[members] using only edges ordered after e, directed by vertex id
    const auto after = edge_order.rank(e);
    const auto size = static_cast<std::uint32_t>(members.size());
    BitMatrix adj(size);
    for (std::uint32_t i = 0; i < size; ++i) {
      auto nb = g.neighbors(members[i]);
      std::uint32_t j = i + 1;
      std::size_t a = 0;
      while (j < size && a < nb.size()) {
        if (members[j] < nb[a]) {
          ++j;
        } else if (nb[a] < members[j]) {
          ++a;
        } else {
          if (edge_order.rank(*g.edge_id(members[i], members[j])) > after) adj.set(i, j);
          ++j;
          ++a;
        }
      }
    }
    const MatrixFrame frame{adj.view(), members, {}};
    std::vector<item_t> all(size);
    for (std::uint32_t i = 0; i < size; ++i) all[i] = i;
    Search<MatrixFrame> search(frame, options, local, stats, k - 2);
    const auto [u, v] = g.edge(e);
    search.clique().push_back(u);
    search.clique().push_back(v);
    search.run(all, k - 2, 1);
  });
}

ListingResult run_hybrid(const Graph& g, int k, double eps, CliqueSink& sink,
                         const ListingOptions& options) {
  require_k(k);
  const auto approx = approx_degeneracy_order(g, eps);
  const auto dag = orient(g, approx.order);
  if (k == 1) return list_small(dag, k, sink);
  const auto need = static_cast<std::size_t>(k - 1);

  return parallel_tasks(dag.num_vertices(), sink, options,
                        [&](std::uint64_t x, CliqueSink& local, SearchStats& stats) {
    const auto v = static_cast<vertex_t>(x);
    const auto out = dag.out_neighbors(v);
    if (out.size() < need) return;
    const auto sub = induced_subgraph(dag, CandidateSet({out.begin(), out.end()}));
    const auto local_graph = sub.undirected();
    const auto inner = orient(local_graph, degeneracy_order(local_graph).order);
    std::vector<vertex_t> originals(inner.num_vertices());
    for (vertex_t p = 0; p < inner.num_vertices(); ++p)
      originals[p] = sub.original(inner.original(p));

    const auto store = build_communities(inner);
    const auto probe = build_probe(inner, store, store.max_size(),
                                   ProbeConfig{.force = ProbeStrategy::kHash});
    std::vector<item_t> all(inner.num_vertices());
    for (vertex_t p = 0; p < inner.num_vertices(); ++p) all[p] = p;

    const GlobalFrame frame{&store, &probe, originals};
    Search<GlobalFrame> search(frame, options, local, stats, k - 1);
    search.clique().push_back(dag.original(v));
    search.run(all, k - 1, 1);
  });
}

}  // namespace kclique
