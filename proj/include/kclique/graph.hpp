#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kclique {

using vertex_t = std::uint32_t;
using edge_t = std::uint64_t;

/// Input text could not be parsed; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Array lengths disagree (e.g. an order for a different graph).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar parameter is out of its domain (k < 1, eps <= 0, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted by vertex id. Every undirected edge {u, v} with
/// u < v has a canonical EdgeId: edges are numbered by (u, v) lexicographically,
/// which is the same numbering the identity orientation produces.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph on `n` vertices. Self-loops and duplicate or reversed
  /// duplicate pairs are dropped. Throws DimensionError on out-of-range ids.
  static Graph from_edges(vertex_t n, std::span<const std::pair<vertex_t, vertex_t>> edges);

  vertex_t num_vertices() const { return static_cast<vertex_t>(offsets_.size() - 1); }
  edge_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  vertex_t degree(vertex_t v) const {
    return static_cast<vertex_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(vertex_t u, vertex_t v) const;

  /// Canonical id of {u, v}, if it is an edge.
  std::optional<edge_t> edge_id(vertex_t u, vertex_t v) const;
  /// Endpoints (u < v) of the canonical edge `e`.
  std::pair<vertex_t, vertex_t> edge(edge_t e) const;
  /// All edges in canonical order.
  std::vector<std::pair<vertex_t, vertex_t>> edges() const;

  std::span<const edge_t> offsets() const { return offsets_; }
  std::span<const vertex_t> adjacency() const { return neighbors_; }

  /// External id of `v` (the id in the source file, or the parent graph's
  /// vertex id for graphs derived from another graph).
  std::uint64_t label(vertex_t v) const { return labels_.empty() ? v : labels_[v]; }
  std::span<const std::uint64_t> labels() const { return labels_; }
  void set_labels(std::vector<std::uint64_t> labels);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<edge_t> offsets_;
  std::vector<vertex_t> neighbors_;
  // upper_offsets_[u] = number of canonical edges whose smaller endpoint is < u
  std::vector<edge_t> upper_offsets_;
  std::vector<std::uint64_t> labels_;
};

/// A total order on [0, n): `rank(v)` is the position of v, `at(p)` the
/// vertex at position p. Tag keeps vertex and edge orders apart.
template <class Tag>
class Order {
 public:
  Order() = default;

  /// Order listing elements first to last. Throws DimensionError unless
  /// `sequence` is a permutation of [0, size).
  static Order from_sequence(std::vector<std::uint64_t> sequence) {
    Order o;
    o.rank_.assign(sequence.size(), kUnset);
    for (std::size_t p = 0; p < sequence.size(); ++p) {
      const auto x = sequence[p];
      if (x >= sequence.size() || o.rank_[x] != kUnset)
        throw DimensionError("order is not a permutation");
      o.rank_[x] = p;
    }
    o.inv_ = std::move(sequence);
    return o;
  }

  static Order identity(std::size_t n) {
    std::vector<std::uint64_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = i;
    return from_sequence(std::move(seq));
  }

  std::size_t size() const { return inv_.size(); }
  std::uint64_t rank(std::uint64_t x) const { return rank_[x]; }
  std::uint64_t at(std::uint64_t p) const { return inv_[p]; }
  std::span<const std::uint64_t> ranks() const { return rank_; }
  std::span<const std::uint64_t> sequence() const { return inv_; }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  static constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> rank_;
  std::vector<std::uint64_t> inv_;
};

struct VertexOrderTag {};
struct EdgeOrderTag {};
using VertexOrder = Order<VertexOrderTag>;
using EdgeOrder = Order<EdgeOrderTag>;

/// Sorted set of vertices, strictly increasing. For an OrientedGraph the
/// vertex ids are positions, so sorted by id means sorted by rank.
class CandidateSet {
 public:
  CandidateSet() = default;
  /// Throws ParameterError unless `vertices` is strictly increasing.
  explicit CandidateSet(std::vector<vertex_t> vertices);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  vertex_t operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const vertex_t> vertices() const { return vertices_; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  std::optional<std::size_t> index_of(vertex_t v) const;
  /// Number of members strictly between u and v (both members, u before v).
  std::size_t distance(vertex_t u, vertex_t v) const;

 private:
  std::vector<vertex_t> vertices_;
};

/// Acyclic orientation of a graph by a total vertex order.
///
/// Vertices are identified by their position in the order, so every directed
/// edge (p, q) has p < q and out-lists sorted by id are sorted by rank.
/// `original(p)` maps a position back to the source graph's vertex id; for
/// induced subgraphs it maps all the way back to the root graph.
///
/// Directed edges are numbered by their slot in the out-adjacency array:
/// EdgeId e has tail `tail(e)` and head `head(e)`.
class OrientedGraph {
 public:
  OrientedGraph() : out_offsets_(1, 0), in_offsets_(1, 0) {}

  vertex_t num_vertices() const { return static_cast<vertex_t>(original_.size()); }
  edge_t num_edges() const { return out_.size(); }

  std::span<const vertex_t> out_neighbors(vertex_t p) const {
    return {out_.data() + out_offsets_[p], out_.data() + out_offsets_[p + 1]};
  }
  std::span<const vertex_t> in_neighbors(vertex_t p) const {
    return {in_.data() + in_offsets_[p], in_.data() + in_offsets_[p + 1]};
  }
  vertex_t out_degree(vertex_t p) const {
    return static_cast<vertex_t>(out_offsets_[p + 1] - out_offsets_[p]);
  }
  vertex_t in_degree(vertex_t p) const {
    return static_cast<vertex_t>(in_offsets_[p + 1] - in_offsets_[p]);
  }
  vertex_t max_out_degree() const;

  edge_t first_edge(vertex_t p) const { return out_offsets_[p]; }
  vertex_t tail(edge_t e) const { return tails_[e]; }
  vertex_t head(edge_t e) const { return out_[e]; }
  /// Id of the directed edge (p, q), if present (binary search).
  std::optional<edge_t> find_edge(vertex_t p, vertex_t q) const;

  vertex_t original(vertex_t p) const { return original_[p]; }
  std::span<const vertex_t> originals() const { return original_; }
  /// Position of an original vertex, if it belongs to this graph.
  std::optional<vertex_t> position(vertex_t original) const;

  /// The underlying undirected graph on positions [0, n).
  Graph undirected() const;

  /// Throws std::logic_error if an invariant is violated (test hook).
  void check_invariants() const;

 private:
  friend OrientedGraph orient(const Graph& g, const VertexOrder& order);
  friend OrientedGraph induced_subgraph(const OrientedGraph& dag, const CandidateSet& vertices);
  void finish();

  std::vector<edge_t> out_offsets_;
  std::vector<vertex_t> out_;
  std::vector<vertex_t> tails_;
  std::vector<edge_t> in_offsets_;
  std::vector<vertex_t> in_;
  std::vector<vertex_t> original_;
  std::vector<std::pair<vertex_t, vertex_t>> by_original_;  // (original, position), sorted
};

/// Directs every edge from the lower-ranked to the higher-ranked endpoint.
OrientedGraph orient(const Graph& g, const VertexOrder& order);

/// Subgraph induced by `vertices` (positions of `dag`), relabeled to
/// consecutive positions in the same relative order.
OrientedGraph induced_subgraph(const OrientedGraph& dag, const CandidateSet& vertices);

// Edge-list text and binary cache I/O.

/// Reads whitespace-separated id pairs, one per line; '#' starts a comment
/// line. Ids are compacted to [0, n) in ascending order and kept as labels.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Writes one "u v" line per edge using labels; isolated vertices are written
/// as "v v" so that reloading reproduces the same vertex set.
void write_edge_list(const Graph& g, std::ostream& out);

/// Binary cache: 8 magic bytes, then little-endian u64 version, n, m,
/// offsets[n + 1], neighbors[2m].
void save_binary(const Graph& g, std::ostream& out);
Graph load_binary(std::istream& in);
bool is_binary_graph(std::istream& in);

/// Loads either format, sniffing the magic bytes.
Graph load_graph_file(const std::string& path);

/// Newline-separated id list, first to last.
void write_order(std::span<const std::uint64_t> sequence, std::ostream& out);
std::vector<std::uint64_t> read_order(std::istream& in);

}  // namespace kclique
