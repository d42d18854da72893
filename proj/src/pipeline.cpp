#include "kclique/pipeline.hpp"

#include <chrono>

#include "kclique/ordering.hpp"

namespace kclique {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::kDegeneracy: return "degeneracy";
    case OrderKind::kApproxDegeneracy: return "approx-degeneracy";
    case OrderKind::kHybrid: return "hybrid";
    case OrderKind::kCommdeg: return "commdeg";
    case OrderKind::kApproxCommdeg: return "approx-commdeg";
  }
  return "?";
}

std::optional<OrderKind> parse_order_kind(std::string_view name) {
  for (auto kind : kAllOrders)
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

PipelineResult count_cliques(const Graph& g, const PipelineConfig& config, CliqueSink& sink) {
  if (config.k < 1) throw ParameterError("k must be at least 1");
  if (!(config.eps > 0.0)) throw ParameterError("epsilon must be positive");
  PipelineResult result;
  auto start = Clock::now();

  auto run_oriented = [&](const VertexOrder& order) {
    const auto dag = orient(g, order);
    const auto store = build_communities(dag);
    const auto probe = build_probe(dag, store, store.max_size(), config.probe);
    result.gamma = store.max_size();
    result.probe = probe.strategy();
    result.order_ms = ms_since(start);
    start = Clock::now();
    const auto listed = run_degeneracy(dag, store, probe, config.k, sink, config.listing);
    result.count = listed.count;
    result.stats = listed.stats;
  };
  auto run_edge_order = [&](const CommDegResult& order) {
    result.sigma = order.sigma;
    result.order_ms = ms_since(start);
    start = Clock::now();
    const auto listed = run_commdeg(g, order.edge_order, config.k, sink, config.listing);
    result.count = listed.count;
    result.stats = listed.stats;
  };

  switch (config.order) {
    case OrderKind::kDegeneracy: {
      const auto order = degeneracy_order(g);
      result.s = order.s;
      run_oriented(order.order);
      break;
    }
    case OrderKind::kApproxDegeneracy: {
      const auto order = approx_degeneracy_order(g, config.eps);
      result.achieved_bound = order.s;
      run_oriented(order.order);
      break;
    }
    case OrderKind::kHybrid: {
      result.achieved_bound = approx_degeneracy_order(g, config.eps).s;
      result.order_ms = ms_since(start);
      start = Clock::now();
      const auto listed = run_hybrid(g, config.k, config.eps, sink, config.listing);
      result.count = listed.count;
      result.stats = listed.stats;
      break;
    }
    case OrderKind::kCommdeg:
      run_edge_order(commdeg_order_greedy(g));
      break;
    case OrderKind::kApproxCommdeg: {
      const auto order = approx_commdeg_order(g, config.eps);
      result.rounds = order.rounds;
      run_edge_order(order);
      break;
    }
  }
  result.listing_ms = ms_since(start);
  return result;
}

}  // namespace kclique
