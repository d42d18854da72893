#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "kclique/community.hpp"
#include "kclique/graph.hpp"
#include "kclique/listing.hpp"

namespace kclique {

enum class OrderKind { kDegeneracy, kApproxDegeneracy, kHybrid, kCommdeg, kApproxCommdeg };

inline constexpr OrderKind kAllOrders[] = {OrderKind::kDegeneracy, OrderKind::kApproxDegeneracy,
                                           OrderKind::kHybrid, OrderKind::kCommdeg,
                                           OrderKind::kApproxCommdeg};

std::string_view to_string(OrderKind kind);
std::optional<OrderKind> parse_order_kind(std::string_view name);

struct PipelineConfig {
  OrderKind order = OrderKind::kDegeneracy;
  int k = 3;
  double eps = 0.5;
  ListingOptions listing;
  ProbeConfig probe;
};

/// Count plus whatever the chosen order reports about itself.
struct PipelineResult {
  std::uint64_t count = 0;
  SearchStats stats;
  std::optional<std::uint32_t> s;               // degeneracy
  std::optional<std::uint32_t> achieved_bound;  // max out-degree of an approximate order
  std::optional<std::uint32_t> sigma;           // community degeneracy or its round-based bound
  std::optional<std::uint32_t> rounds;
  std::optional<std::uint32_t> gamma;  // largest community searched from the top level
  std::optional<ProbeStrategy> probe;
  double order_ms = 0;
  double listing_ms = 0;
};

/// Orders `g`, builds what the order mode needs and lists its k-cliques.
PipelineResult count_cliques(const Graph& g, const PipelineConfig& config, CliqueSink& sink);

}  // namespace kclique
