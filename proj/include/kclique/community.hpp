#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "kclique/graph.hpp"

namespace kclique {

/// Communities of every directed edge of an OrientedGraph.
///
/// For e = (u, v), members(e) = out(u) ∩ in(v), sorted by rank. Every
/// triangle is stored exactly once, under the edge joining its lowest and
/// highest vertex, so the total size is the triangle count.
class CommunityStore {
 public:
  std::span<const vertex_t> members(edge_t e) const {
    return {members_.data() + offsets_[e], members_.data() + offsets_[e + 1]};
  }
  std::size_t size(edge_t e) const { return offsets_[e + 1] - offsets_[e]; }
  edge_t num_edges() const { return offsets_.size() - 1; }
  std::uint64_t total() const { return members_.size(); }
  /// Largest community size (gamma).
  std::uint32_t max_size() const { return max_size_; }

 private:
  friend CommunityStore build_communities(const OrientedGraph& dag);
  std::vector<std::uint64_t> offsets_{0};
  std::vector<vertex_t> members_;
  std::uint32_t max_size_ = 0;
};

CommunityStore build_communities(const OrientedGraph& dag);

/// Exact triangle count by merge-intersecting out-lists of a low-out-degree
/// orientation. Independent of CommunityStore.
std::uint64_t count_triangles(const Graph& g);

/// Vertices w such that {u, w} and {w, v} are both edges ordered strictly
/// after the canonical edge e = {u, v}; sorted by id.
std::vector<vertex_t> restricted_community(const Graph& g, edge_t e, const EdgeOrder& order);

/// Read-only view of a square bit matrix.
struct BitMatrixView {
  const std::uint64_t* words = nullptr;
  std::uint32_t n = 0;
  std::uint32_t stride = 0;  // words per row

  bool test(std::uint32_t i, std::uint32_t j) const {
    return (words[std::size_t{i} * stride + (j >> 6)] >> (j & 63)) & 1u;
  }
};

/// Owning square bit matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::uint32_t n) { reset(n); }

  void reset(std::uint32_t n) {
    n_ = n;
    stride_ = (n + 63) / 64;
    words_.assign(std::size_t{n} * stride_, 0);
  }
  void set(std::uint32_t i, std::uint32_t j) {
    words_[std::size_t{i} * stride_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }
  bool test(std::uint32_t i, std::uint32_t j) const { return view().test(i, j); }
  std::uint32_t size() const { return n_; }
  BitMatrixView view() const { return {words_.data(), n_, stride_}; }

 private:
  std::vector<std::uint64_t> words_;
  std::uint32_t n_ = 0;
  std::uint32_t stride_ = 0;
};

enum class ProbeStrategy { kMatrix, kHash };

struct ProbeConfig {
  /// Largest community size for which per-community matrices are built.
  std::uint32_t gamma_threshold = 256;
  /// Matrices are skipped in favour of the hash set beyond this many bytes.
  std::uint64_t max_matrix_bytes = std::uint64_t{1} << 30;
  std::optional<ProbeStrategy> force;
};

/// Edge-existence probe for an OrientedGraph.
///
/// The matrix strategy stores, for every edge e, the adjacency matrix of the
/// subgraph induced by C(e) with members renumbered 0..|C(e)|-1. The hash
/// strategy keeps one hash map from directed pairs to EdgeIds. Both answer
/// `probe(scope, u, v)` for u, v in C(scope) identically.
///
/// Keeps a pointer to the graph; the graph must outlive the probe.
class EdgeProbe {
 public:
  ProbeStrategy strategy() const { return strategy_; }

  /// Is (u, v) a directed edge? u and v must be members of C(scope).
  bool probe(edge_t scope, vertex_t u, vertex_t v) const;

  /// Id of the directed edge (u, v), any u, v.
  std::optional<edge_t> find(vertex_t u, vertex_t v) const;

  /// Matrix of G[C(scope)] in local indices. Matrix strategy only.
  BitMatrixView matrix(edge_t scope) const;

  std::uint64_t memory_bytes() const;

 private:
  friend EdgeProbe build_probe(const OrientedGraph&, const CommunityStore&, std::uint32_t,
                               const ProbeConfig&);
  ProbeStrategy strategy_ = ProbeStrategy::kHash;
  const OrientedGraph* dag_ = nullptr;
  const CommunityStore* store_ = nullptr;
  std::unordered_map<std::uint64_t, edge_t> pairs_;
  std::vector<std::uint64_t> matrix_offsets_;  // in words, per edge
  std::vector<std::uint64_t> matrix_words_;
};

/// Picks the matrix strategy when gamma <= config.gamma_threshold and the
/// matrices fit in config.max_matrix_bytes, the hash strategy otherwise.
EdgeProbe build_probe(const OrientedGraph& dag, const CommunityStore& store, std::uint32_t gamma,
                      const ProbeConfig& config = {});

}  // namespace kclique
