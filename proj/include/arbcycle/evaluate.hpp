#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbcycle/cycle.hpp"
#include "arbcycle/snapshot.hpp"
#include "arbcycle/transform.hpp"

namespace arbcycle {

struct ProfitReport {
  CycleReport cycle;
  std::vector<std::string> path;   // node labels, closing node repeated at the end
  std::vector<std::string> steps;  // one trade instruction per hop
  bool is_profitable = false;      // product > 1
};

/// Multiplies the original rates along the cycle and renders the trades.
/// Throws std::invalid_argument if the nodes do not form a closed walk.
ProfitReport evaluate_cycle(std::span<const NodeIndex> nodes, const ExchangeGraph& graph);
/// Same, and fills `sum_weight` from the transformed graph.
ProfitReport evaluate_cycle(std::span<const NodeIndex> nodes, const ExchangeGraph& graph,
                            const TransformedGraph& transformed);

/// {path, product, profit_pct, is_profitable, sum_weight, steps}
nlohmann::json to_json(const ProfitReport& report);

enum class CycleObjective { max_product, min_sum };

struct BruteForceOptions {
  CycleObjective objective = CycleObjective::min_sum;
  MinLength min_length = MinLength::two;
  std::size_t max_length = 9;
  std::size_t node_cap = 64;  // refuse larger graphs
};

/// Exhaustive oracle over simple cycles with min_length <= length <=
/// max_length. Each cycle is enumerated once from its smallest node in
/// lexicographic order, and ties keep the lexicographically first cycle.
/// min_sum prunes partial paths already at or above the incumbent.
///
/// The ExchangeGraph overload supports max_product only; the DistanceMatrix
/// overload (an adjacency matrix) supports min_sum only. Throws
/// std::invalid_argument past node_cap or for an unsupported objective.
std::optional<CycleReport> brute_force_best_cycle(const ExchangeGraph& graph,
                                                  const BruteForceOptions& options);
std::optional<CycleReport> brute_force_best_cycle(const TransformedGraph& graph,
                                                  const BruteForceOptions& options);
std::optional<CycleReport> brute_force_best_cycle(const DistanceMatrix& adjacency,
                                                  const BruteForceOptions& options);

}  // namespace arbcycle
