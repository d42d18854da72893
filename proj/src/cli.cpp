#include "kclique/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "kclique/community.hpp"
#include "kclique/generators.hpp"
#include "kclique/graph.hpp"
#include "kclique/oracle.hpp"
#include "kclique/ordering.hpp"
#include "kclique/pipeline.hpp"

namespace kclique {
namespace {

using json = nlohmann::ordered_json;

// Bad flag values or combinations that CLI11 cannot see on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  int k = 3;
  std::string order = "degeneracy";
  double epsilon = 0.5;
  int threads = 0;
  std::string mode = "count";
  bool no_prune = false;
  bool verify = false;
  std::string output;
  std::string probe = "auto";
};

struct BenchConfig {
  std::string input;
  std::vector<int> ks{4};
  std::vector<int> threads{1};
  std::vector<std::string> orders{"degeneracy"};
  double epsilon = 0.5;
  int repetitions = 10;
  std::string prune = "on";
  std::string output;
};

struct GenerateConfig {
  std::string family;
  std::uint32_t n = 10;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t papers = 1000;
  unsigned max_team = 8;
  std::string output;
};

template <class T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

OrderKind order_or_throw(const std::string& name) {
  auto kind = parse_order_kind(name);
  if (!kind) throw UsageError("unknown order '" + name + "'");
  return *kind;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

void apply_threads(int threads) {
  if (threads < 0) throw UsageError("--threads must be at least 1");
  if (threads > 0) omp_set_num_threads(threads);
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k < 1) throw UsageError("-k must be at least 1");
  if (!(cfg.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  const bool listing = cfg.mode == "list";
  if (listing && cfg.output.empty()) throw UsageError("--mode list needs --output");
  apply_threads(cfg.threads);

  const Graph g = load_graph_file(cfg.input);
  if (cfg.verify && g.num_vertices() > oracle::kMaxCliqueVertices)
    throw UsageError("--verify supports at most " + std::to_string(oracle::kMaxCliqueVertices) +
                     " vertices, input has " + std::to_string(g.num_vertices()));

  PipelineConfig pc;
  pc.order = order_or_throw(cfg.order);
  pc.k = cfg.k;
  pc.eps = cfg.epsilon;
  pc.listing.prune = !cfg.no_prune;
  pc.listing.threads = cfg.threads;
  if (cfg.probe == "matrix") pc.probe.force = ProbeStrategy::kMatrix;
  if (cfg.probe == "hash") pc.probe.force = ProbeStrategy::kHash;

  CliqueSink sink(listing || cfg.verify ? CliqueSink::Mode::kCollect : CliqueSink::Mode::kCount);
  const auto result = count_cliques(g, pc, sink);

  std::optional<bool> verified;
  std::optional<std::uint64_t> oracle_count;
  if (cfg.verify) {
    const auto expected = oracle::brute_force_cliques(g, cfg.k);
    oracle_count = expected.size();
    verified = expected == sink.canonical() && expected.size() == result.count;
    if (!*verified)
      err << "verification failed: engine " << result.count << ", oracle " << expected.size()
          << "\n";
  }

  if (listing) {
    auto file = open_output(cfg.output);
    for (const auto& clique : sink.canonical()) {
      for (std::size_t i = 0; i < clique.size(); ++i)
        file << (i ? " " : "") << g.label(clique[i]);
      file << '\n';
    }
  }

  const std::string probe_name =
      !result.probe ? "" : *result.probe == ProbeStrategy::kMatrix ? "matrix" : "hash";
  json doc;
  doc["k"] = cfg.k;
  doc["count"] = result.count;
  doc["order"] = std::string(to_string(pc.order));
  doc["epsilon"] = cfg.epsilon;
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  doc["s"] = optional_json(result.s);
  doc["achieved_bound"] = optional_json(result.achieved_bound);
  doc["sigma"] = optional_json(result.sigma);
  doc["rounds"] = optional_json(result.rounds);
  doc["gamma"] = optional_json(result.gamma);
  doc["probe"] = probe_name.empty() ? json(nullptr) : json(probe_name);
  doc["threads"] = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  doc["prune"] = !cfg.no_prune;
  doc["recursive_calls"] = result.stats.recursive_calls;
  doc["edge_probes"] = result.stats.edge_probes;
  doc["intersections"] = result.stats.intersections;
  doc["listed_cliques"] = result.stats.listed_cliques;
  doc["max_depth"] = result.stats.max_depth;
  doc["order_ms"] = result.order_ms;
  doc["elapsed_ms"] = result.listing_ms;
  doc["verified"] = optional_json(verified);
  doc["oracle_count"] = optional_json(oracle_count);
  out << doc.dump() << '\n';
  return verified.value_or(true) ? kExitOk : kExitMismatch;
}

int cmd_stats(const std::string& input, std::ostream& out) {
  const Graph g = load_graph_file(input);
  const auto degeneracy = degeneracy_order(g);
  const auto dag = orient(g, degeneracy.order);
  const auto store = build_communities(dag);
  json doc;
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  doc["T"] = count_triangles(g);
  doc["s"] = degeneracy.s;
  doc["sigma"] = commdeg_order_greedy(g).sigma;
  doc["max_community"] = store.max_size();
  out << doc.dump() << '\n';
  return kExitOk;
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.repetitions < 1) throw UsageError("--repetitions must be at least 1");
  if (!(cfg.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  std::vector<bool> prune_settings;
  if (cfg.prune == "on" || cfg.prune == "both") prune_settings.push_back(true);
  if (cfg.prune == "off" || cfg.prune == "both") prune_settings.push_back(false);
  for (int k : cfg.ks)
    if (k < 1) throw UsageError("-k must be at least 1");
  for (int t : cfg.threads)
    if (t < 1) throw UsageError("--threads must be at least 1");
  std::vector<OrderKind> orders;
  for (const auto& name : cfg.orders) orders.push_back(order_or_throw(name));

  const Graph g = load_graph_file(cfg.input);
  const auto graph_name = std::filesystem::path(cfg.input).filename().string();

  std::ofstream file;
  if (!cfg.output.empty()) file = open_output(cfg.output);
  std::ostream& csv = cfg.output.empty() ? out : file;
  csv << "graph,order,k,threads,count,elapsed_ms,recursive_calls,probes,prune\n";

  bool consistent = true;
  for (auto order : orders) {
    for (int k : cfg.ks) {
      std::optional<std::uint64_t> reference;
      for (bool prune : prune_settings) {
        for (int threads : cfg.threads) {
          omp_set_num_threads(threads);
          PipelineConfig pc;
          pc.order = order;
          pc.k = k;
          pc.eps = cfg.epsilon;
          pc.listing.prune = prune;
          pc.listing.threads = threads;
          double total_ms = 0;
          PipelineResult last;
          for (int rep = 0; rep < cfg.repetitions; ++rep) {
            CliqueSink sink;
            last = count_cliques(g, pc, sink);
            total_ms += last.order_ms + last.listing_ms;
          }
          if (reference && *reference != last.count) {
            consistent = false;
            err << "count mismatch for order " << to_string(order) << " k=" << k
                << " threads=" << threads << ": " << last.count << " vs " << *reference << "\n";
          }
          reference = last.count;
          csv << graph_name << ',' << to_string(order) << ',' << k << ',' << threads << ','
              << last.count << ',' << total_ms / cfg.repetitions << ','
              << last.stats.recursive_calls << ',' << last.stats.edge_probes << ','
              << (prune ? "on" : "off") << '\n';
        }
      }
    }
  }
  return consistent ? kExitOk : kExitMismatch;
}

int cmd_generate(const GenerateConfig& cfg, std::ostream& out) {
  Graph g;
  if (cfg.family == "complete") {
    g = gen::complete(cfg.n);
  } else if (cfg.family == "star") {
    g = gen::star(cfg.n);
  } else if (cfg.family == "hypercube") {
    g = gen::hypercube(cfg.n);
  } else if (cfg.family == "k6-minus-edge") {
    g = gen::k6_minus_edge();
  } else if (cfg.family == "gnp") {
    g = gen::gnp(cfg.n, cfg.p, cfg.seed);
  } else if (cfg.family == "collaboration") {
    g = gen::collaboration(cfg.n, cfg.papers, cfg.max_team, cfg.seed);
  } else {
    throw UsageError("unknown family '" + cfg.family + "'");
  }
  if (cfg.output.empty()) {
    write_edge_list(g, out);
  } else {
    auto file = open_output(cfg.output);
    write_edge_list(g, file);
  }
  return kExitOk;
}

int cmd_convert(const std::string& input, const std::string& output) {
  const Graph g = load_graph_file(input);
  std::ofstream file(output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + output + "'");
  save_binary(g, file);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-clique counting and listing for sparse graphs", "kclique"};
  app.require_subcommand(1);
  const std::vector<std::string> order_names = [] {
    std::vector<std::string> names;
    for (auto kind : kAllOrders) names.emplace_back(to_string(kind));
    return names;
  }();

  RunConfig run;
  auto* count = app.add_subcommand("count", "count or list the k-cliques of a graph");
  count->add_option("input", run.input, "edge list or binary graph file")->required();
  count->add_option("-k", run.k, "clique size")->required();
  count->add_option("--order", run.order, "vertex/edge order")
      ->check(CLI::IsMember(order_names))
      ->capture_default_str();
  count->add_option("--epsilon", run.epsilon, "approximation slack")->capture_default_str();
  count->add_option("--threads", run.threads, "worker threads (0 = all)");
  count->add_option("--mode", run.mode, "count or list")
      ->check(CLI::IsMember({"count", "list"}))
      ->capture_default_str();
  count->add_flag("--no-prune", run.no_prune, "try every candidate pair");
  count->add_flag("--verify", run.verify, "compare with the brute-force oracle (n <= 30)");
  count->add_option("-o,--output", run.output, "clique output file for --mode list");
  count->add_option("--probe", run.probe, "edge probe strategy")
      ->check(CLI::IsMember({"auto", "matrix", "hash"}))
      ->capture_default_str();

  std::string stats_input;
  auto* stats = app.add_subcommand("stats", "print n, m, T, s, sigma and largest community");
  stats->add_option("input", stats_input, "graph file")->required();

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "time counting over orders, k and threads");
  bench_cmd->add_option("input", bench.input, "graph file")->required();
  bench_cmd->add_option("-k", bench.ks, "clique sizes")->delimiter(',');
  bench_cmd->add_option("--threads", bench.threads, "thread counts")->delimiter(',');
  bench_cmd->add_option("--orders", bench.orders, "orders")
      ->delimiter(',')
      ->check(CLI::IsMember(order_names));
  bench_cmd->add_option("--epsilon", bench.epsilon, "approximation slack");
  bench_cmd->add_option("--repetitions", bench.repetitions, "runs averaged per row")
      ->capture_default_str();
  bench_cmd->add_option("--prune", bench.prune, "on, off or both")
      ->check(CLI::IsMember({"on", "off", "both"}));
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  GenerateConfig generate;
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic graph as an edge list");
  gen_cmd->add_option("family", generate.family,
                      "complete, star, hypercube, k6-minus-edge, gnp or collaboration")
      ->required();
  gen_cmd->add_option("-n", generate.n, "vertices, leaves, dimension or authors");
  gen_cmd->add_option("-p", generate.p, "edge probability (gnp)");
  gen_cmd->add_option("--seed", generate.seed, "random seed");
  gen_cmd->add_option("--papers", generate.papers, "teams (collaboration)");
  gen_cmd->add_option("--max-team", generate.max_team, "largest team (collaboration)");
  gen_cmd->add_option("-o,--output", generate.output, "output file (default stdout)");

  std::string convert_in, convert_out;
  auto* convert = app.add_subcommand("convert", "write the binary cache of a graph");
  convert->add_option("input", convert_in, "graph file")->required();
  convert->add_option("output", convert_out, "binary output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(run, out, err);
    if (*stats) return cmd_stats(stats_input, out);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*gen_cmd) return cmd_generate(generate, out);
    if (*convert) return cmd_convert(convert_in, convert_out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kclique
