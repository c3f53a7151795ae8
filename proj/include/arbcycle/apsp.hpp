#pragma once

#include <optional>
#include <span>

#include "arbcycle/cycle.hpp"
#include "arbcycle/distance_matrix.hpp"

namespace arbcycle {

struct ProductResult {
  DistanceMatrix product;
  std::optional<WitnessMatrix> witnesses;
};

/// Distance (min-plus) product C[u][v] = min_k A[u][k] + B[k][v] with
/// saturating sums. With `capture_witnesses`, W[u][v] is the smallest k
/// attaining the minimum; entries with C[u][v] == kInf stay empty. Rows are
/// computed in parallel; the result does not depend on the worker count.
ProductResult min_plus_product(const DistanceMatrix& a, const DistanceMatrix& b,
                               bool capture_witnesses = false);

/// Distance product with the inner index restricted to `inner`:
/// C[u][v] = min over k in inner of A[u][k] + B[k][v].
DistanceMatrix min_plus_product_over(const DistanceMatrix& a, const DistanceMatrix& b,
                                     std::span<const NodeIndex> inner);

/// Exact all-pairs shortest paths by ceil(log2 n) min-plus squarings (stops
/// early at a fixed point). The adjacency must have a zero diagonal.
DistanceMatrix apsp_by_squaring(const DistanceMatrix& adjacency);

/// Plain Floyd-Warshall shortest paths (zero diagonal).
DistanceMatrix floyd_warshall_distances(const DistanceMatrix& adjacency);

/// Minimum weight cycle baseline. Floyd-Warshall runs on the adjacency with an
/// infinite diagonal and predecessor tracking, so D[u][u] ends up as the
/// lightest closed walk through u.
///
/// MinLength::two returns the cycle realising min_u D[u][u] (smallest u on
/// ties). MinLength::three discards any closing u -> k -> u made of two single
/// edges and adds a direct sweep over 3-cycles, which together cover every
/// closed walk of the form edge + path + path through a third node.
///
/// Returns nullopt when no qualifying cycle exists. `nodes` starts at the
/// smallest index; `sum_weight` is set, rates are not.
std::optional<CycleReport> floyd_warshall_min_cycle(const DistanceMatrix& adjacency,
                                                    MinLength min_length);

/// Karp reduction: min over edges (u,v) of w(u,v) + D[v][u] for exact
/// all-pairs distances D. For MinLength::three the return leg must leave v by
/// an edge (v,x) with x != u, i.e. w(u,v) + w(v,x) + D[x][u].
std::optional<Weight> karp_min_cycle_weight(const DistanceMatrix& distances,
                                            std::span<const WeightedEdge> edges,
                                            MinLength min_length);

}  // namespace arbcycle
