#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kclique/community.hpp"
#include "kclique/graph.hpp"
#include "kclique/ordering.hpp"

namespace kclique {

/// Receives cliques as arrays of original (root graph) vertex ids.
///
/// A counting sink only tallies; a collecting sink also keeps every clique.
/// Both report identical counts on identical inputs.
class CliqueSink {
 public:
  enum class Mode { kCount, kCollect };

  explicit CliqueSink(Mode mode = Mode::kCount) : mode_(mode) {}

  Mode mode() const { return mode_; }
  bool collecting() const { return mode_ == Mode::kCollect; }

  void emit(std::span<const vertex_t> clique);
  /// Tallies `count` cliques without their vertices. Counting mode only.
  void add_count(std::uint64_t count) { count_ += count; }

  std::uint64_t count() const { return count_; }
  /// Number of stored cliques (collect mode).
  std::size_t stored() const { return width_ == 0 ? 0 : buffer_.size() / width_; }
  std::span<const vertex_t> clique(std::size_t i) const {
    return {buffer_.data() + i * width_, width_};
  }

  /// Appends `other`'s tally and cliques.
  void merge(CliqueSink&& other);

  /// Stored cliques, each sorted ascending, in lexicographic order.
  std::vector<std::vector<vertex_t>> canonical() const;

 private:
  Mode mode_;
  std::uint64_t count_ = 0;
  std::size_t width_ = 0;
  std::vector<vertex_t> buffer_;
};

/// Work counters of one search.
///
/// `max_depth` is the deepest recursion level (top call = 1) reached with at
/// least two vertices still missing; base-case levels are not counted.
struct SearchStats {
  std::uint64_t recursive_calls = 0;
  std::uint64_t edge_probes = 0;
  std::uint64_t intersections = 0;
  std::uint64_t listed_cliques = 0;
  std::uint32_t max_depth = 0;

  void merge(const SearchStats& other);
};

struct ListingOptions {
  /// Only try pairs with at least c - 2 candidates between them. Disabling it
  /// tries every pair; results are the same.
  bool prune = true;
  /// OpenMP thread count; 0 keeps the runtime default.
  int threads = 0;
};

struct ListingResult {
  std::uint64_t count = 0;
  SearchStats stats;
};

/// Number of candidate pairs (i, j), i < j, of a sorted set of `size`
/// elements with at least `c` elements between them: C(size - c, 2).
std::uint64_t relevant_pair_count(std::size_t size, std::size_t c);

/// Index pairs (i, j) with j - i - 1 >= c over a sorted set of `size`
/// elements, in lexicographic order.
class RelevantPairs {
 public:
  struct Pair {
    std::size_t i, j;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  class iterator {
   public:
    using value_type = Pair;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    Pair operator*() const { return {i_, j_}; }
    iterator& operator++();
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    friend class RelevantPairs;
    iterator(std::size_t size, std::size_t gap, std::size_t i, std::size_t j)
        : size_(size), gap_(gap), i_(i), j_(j) {}
    std::size_t size_ = 0, gap_ = 0, i_ = 0, j_ = 0;
  };

  RelevantPairs(std::size_t size, std::size_t c) : size_(size), gap_(c + 1) {}
  iterator begin() const;
  iterator end() const { return {size_, gap_, size_, size_}; }

 private:
  std::size_t size_;
  std::size_t gap_;  // minimal j - i
};

/// Relevant pairs of `I`, as index pairs into `I`.
inline RelevantPairs relevant_pairs(const CandidateSet& I, std::size_t c) {
  return {I.size(), c};
}

/// Emits prefix ∪ S for every c-clique S of dag[I].
///
/// Every vertex of `prefix` must precede and be adjacent to every vertex of
/// `I`. Prefix vertices are dag positions.
void recursive_count(const OrientedGraph& dag, const CommunityStore& store, const EdgeProbe& probe,
                     const CandidateSet& I, int c, std::span<const vertex_t> prefix,
                     CliqueSink& sink, SearchStats& stats, const ListingOptions& options = {});

/// Lists every k-clique of `dag` once, through the edge joining its first and
/// last vertex. Throws ParameterError if k < 1.
ListingResult run_degeneracy(const OrientedGraph& dag, const CommunityStore& store,
                             const EdgeProbe& probe, int k, CliqueSink& sink,
                             const ListingOptions& options = {});

/// Lists every k-clique once, through its earliest edge under `edge_order`.
/// Throws ParameterError if k < 1 and DimensionError if the order does not
/// cover the edges of `g`.
ListingResult run_commdeg(const Graph& g, const EdgeOrder& edge_order, int k, CliqueSink& sink,
                          const ListingOptions& options = {});

/// Lists every k-clique once through its lowest vertex v under an
/// approximate degeneracy order, searching the out-neighborhood of v
/// reordered by its own degeneracy order. Throws ParameterError if k < 1 or
/// eps <= 0.
ListingResult run_hybrid(const Graph& g, int k, double eps, CliqueSink& sink,
                         const ListingOptions& options = {});

}  // namespace kclique
