#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <string_view>

#include "kclique/graph.hpp"

namespace kclique {
namespace {

constexpr std::array<char, 8> kMagic = {'K', 'C', 'L', 'Q', 'G', 'R', 'P', 'H'};
constexpr std::uint64_t kBinaryVersion = 1;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "malformed vertex id '" + std::string(token) + "'");
  return value;
}

void put_u64(std::ostream& out, std::uint64_t x) {
  if constexpr (std::endian::native == std::endian::big) x = __builtin_bswap64(x);
  out.write(reinterpret_cast<const char*>(&x), sizeof x);
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t x = 0;
  if (!in.read(reinterpret_cast<char*>(&x), sizeof x))
    throw std::runtime_error("binary graph: unexpected end of file");
  if constexpr (std::endian::native == std::endian::big) x = __builtin_bswap64(x);
  return x;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::uint64_t> ids;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view rest(text);
    std::array<std::string_view, 2> tokens;
    std::size_t count = 0;
    while (true) {
      while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
      if (rest.empty()) break;
      if (count == 0 && rest.front() == '#') break;
      std::size_t len = 0;
      while (len < rest.size() && !is_space(rest[len])) ++len;
      if (count == 2) throw ParseError(line, "expected two vertex ids");
      tokens[count++] = rest.substr(0, len);
      rest.remove_prefix(len);
    }
    if (count == 0) continue;
    if (count == 1) throw ParseError(line, "expected two vertex ids");
    const auto u = parse_id(tokens[0], line);
    const auto v = parse_id(tokens[1], line);
    pairs.emplace_back(u, v);
    ids.push_back(u);
    ids.push_back(v);
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<vertex_t>::max())
    throw std::runtime_error("too many vertices");
  auto compact = [&](std::uint64_t id) {
    return static_cast<vertex_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.emplace_back(compact(u), compact(v));

  Graph g = Graph::from_edges(static_cast<vertex_t>(ids.size()), edges);
  g.set_labels(std::move(ids));
  return g;
}

Graph load_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (vertex_t u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) == 0) out << g.label(u) << ' ' << g.label(u) << '\n';
    for (vertex_t v : g.neighbors(u))
      if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
  }
}

void save_binary(const Graph& g, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, kBinaryVersion);
  put_u64(out, g.num_vertices());
  put_u64(out, g.num_edges());
  for (edge_t o : g.offsets()) put_u64(out, o);
  for (vertex_t v : g.adjacency()) put_u64(out, v);
}

bool is_binary_graph(std::istream& in) {
  std::array<char, 8> head{};
  const auto start = in.tellg();
  in.read(head.data(), head.size());
  const bool match = in.gcount() == static_cast<std::streamsize>(head.size()) && head == kMagic;
  in.clear();
  in.seekg(start);
  return match;
}

Graph load_binary(std::istream& in) {
  std::array<char, 8> head{};
  if (!in.read(head.data(), head.size()) || head != kMagic)
    throw std::runtime_error("binary graph: bad magic bytes");
  if (get_u64(in) != kBinaryVersion) throw std::runtime_error("binary graph: unsupported version");
  const auto n = get_u64(in);
  const auto m = get_u64(in);
  if (n > std::numeric_limits<vertex_t>::max()) throw std::runtime_error("binary graph: n too large");
  std::vector<edge_t> offsets(n + 1);
  for (auto& o : offsets) o = get_u64(in);
  if (offsets.front() != 0 || offsets.back() != 2 * m)
    throw std::runtime_error("binary graph: inconsistent offsets");
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(m);
  for (std::uint64_t u = 0; u < n; ++u) {
    if (offsets[u] > offsets[u + 1]) throw std::runtime_error("binary graph: offsets decrease");
    for (edge_t i = offsets[u]; i < offsets[u + 1]; ++i) {
      const auto v = get_u64(in);
      if (v >= n) throw std::runtime_error("binary graph: neighbor out of range");
      if (u < v) edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
    }
  }
  Graph g = Graph::from_edges(static_cast<vertex_t>(n), edges);
  if (g.num_edges() != m) throw std::runtime_error("binary graph: adjacency is not symmetric");
  return g;
}

Graph load_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  if (is_binary_graph(in)) return load_binary(in);
  return load_edge_list(in);
}

void write_order(std::span<const std::uint64_t> sequence, std::ostream& out) {
  for (auto x : sequence) out << x << '\n';
}

std::vector<std::uint64_t> read_order(std::istream& in) {
  std::vector<std::uint64_t> seq;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view s(text);
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    if (s.empty()) continue;
    seq.push_back(parse_id(s, line));
  }
  return seq;
}

}  // namespace kclique
