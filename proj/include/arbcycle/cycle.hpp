#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arbcycle/distance_matrix.hpp"

namespace arbcycle {

/// Shortest cycle length a search may return. `two` admits back-and-forth
/// trades u -> v -> u.
enum class MinLength { two = 2, three = 3 };

/// A closed walk v0 -> v1 -> ... -> v(l-1) -> v0. The closing node is not
/// repeated in `nodes`.
struct CycleReport {
  std::vector<NodeIndex> nodes;
  std::optional<Weight> sum_weight;  // transformed (integer) weight
  std::optional<double> product;     // product of original rates
  std::optional<double> profit_pct;  // (product - 1) * 100

  std::size_t length() const noexcept { return nodes.size(); }
};

/// Rotates a closed walk so it starts at its smallest node; among several
/// occurrences of that node the lexicographically smallest rotation wins.
std::vector<NodeIndex> normalize_cycle(std::span<const NodeIndex> nodes);

/// True when no node repeats.
bool is_simple_cycle(std::span<const NodeIndex> nodes);

/// Sum of edge weights along the closed walk, looked up in an adjacency
/// matrix. Returns kInf when a hop is not an edge.
Weight cycle_weight(std::span<const NodeIndex> nodes, const DistanceMatrix& adjacency);

}  // namespace arbcycle
