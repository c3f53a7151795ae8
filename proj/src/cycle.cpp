#include "arbcycle/cycle.hpp"

#include <algorithm>
#include <unordered_set>

namespace arbcycle {

std::vector<NodeIndex> normalize_cycle(std::span<const NodeIndex> nodes) {
  std::vector<NodeIndex> best(nodes.begin(), nodes.end());
  if (nodes.empty()) return best;
  const NodeIndex smallest = *std::min_element(nodes.begin(), nodes.end());
  std::vector<NodeIndex> rotated(nodes.size());
  bool have = false;
  for (std::size_t start = 0; start < nodes.size(); ++start) {
    if (nodes[start] != smallest) continue;
    for (std::size_t i = 0; i < nodes.size(); ++i) rotated[i] = nodes[(start + i) % nodes.size()];
    if (!have || rotated < best) {
      best = rotated;
      have = true;
    }
  }
  return best;
}

bool is_simple_cycle(std::span<const NodeIndex> nodes) {
  std::unordered_set<NodeIndex> seen;
  for (auto v : nodes)
    if (!seen.insert(v).second) return false;
  return true;
}

Weight cycle_weight(std::span<const NodeIndex> nodes, const DistanceMatrix& adjacency) {
  Weight total = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeIndex from = nodes[i];
    const NodeIndex to = nodes[(i + 1) % nodes.size()];
    if (from == to || from >= adjacency.size() || to >= adjacency.size()) return kInf;
    total = sat_add(total, adjacency(from, to));
  }
  return total;
}

}  // namespace arbcycle
