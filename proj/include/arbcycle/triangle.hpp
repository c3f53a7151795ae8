#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arbcycle/distance_matrix.hpp"
#include "arbcycle/transform.hpp"

namespace arbcycle {

/// Auxiliary undirected graph on three copies V1, V2, V3 of the node set.
/// Edge lists hold (from, to) as base-node indices within their parts:
///   e12: u1 - v2 with weight D[u][v]
///   e23: u2 - v3 with weight w(u,v) for every original edge
///   e31: u3 - v1 with weight D[u][v]
/// A pair enters e12/e31 iff D[u][v] is finite and, unless
/// `include_two_cycles`, u != v.
struct TripartiteGraph {
  std::size_t n = 0;
  std::vector<WeightedEdge> e12;
  std::vector<WeightedEdge> e23;
  std::vector<WeightedEdge> e31;
  bool include_two_cycles = false;

  std::size_t vertex_count() const noexcept { return 3 * n; }
};

TripartiteGraph build_tripartite(std::size_t n, std::span<const WeightedEdge> edges,
                                 const DistanceMatrix& distances, bool include_two_cycles);
TripartiteGraph build_tripartite(const TransformedGraph& graph, const DistanceMatrix& distances,
                                 bool include_two_cycles);

/// Triangle anchor1 - tail2 - head3 closing through the critical edge
/// (tail, head): total = D[anchor][tail] + w(tail, head) + D[head][anchor].
struct TriangleResult {
  NodeIndex anchor = 0;
  NodeIndex tail = 0;
  NodeIndex head = 0;
  Weight total = 0;

  friend bool operator==(const TriangleResult&, const TriangleResult&) = default;
};

/// Scans every (anchor, critical edge) combination, O(n |E|). Ties go to the
/// smallest (anchor, tail, head). Returns nullopt when G' has no triangle.
std::optional<TriangleResult> min_triangle(const TripartiteGraph& graph);

}  // namespace arbcycle
