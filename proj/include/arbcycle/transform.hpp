#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "arbcycle/distance_matrix.hpp"
#include "arbcycle/snapshot.hpp"

namespace arbcycle {

/// Parameters of the rate -> integer weight map. Logarithms are natural.
struct TransformParams {
  std::int64_t weight_multiplier = 1;  // c
  double scale = 1.0;                  // k = 1 / min_reciprocal
  double min_reciprocal = 1.0;         // smallest 1 / rate
};

/// Every intermediate stage of the weight map, index-aligned with the input
/// rates:
///   reciprocal = 1 / rate
///   scaled     = scale * reciprocal          (>= 1)
///   log        = ln(scaled)                  (>= 0)
///   integer    = max(1, ceil(c * log))
struct WeightStages {
  TransformParams params;
  std::vector<double> reciprocal;
  std::vector<double> scaled;
  std::vector<double> log;
  std::vector<Weight> integer;
};

/// Throws std::invalid_argument for nonpositive rates or c < 1 and
/// std::overflow_error if c * max(log) does not fit a Weight.
WeightStages compute_weight_stages(std::span<const double> rates, std::int64_t weight_multiplier);

/// Exchange graph with integer weights in [1, M]. `edges()` is index-aligned
/// with the source graph's edges; original rates are kept for lookup.
class TransformedGraph {
 public:
  TransformedGraph(std::size_t n, std::vector<WeightedEdge> edges, std::vector<double> rates,
                   TransformParams params);

  std::size_t node_count() const noexcept { return n_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  const std::vector<double>& rates() const noexcept { return rates_; }
  const TransformParams& params() const noexcept { return params_; }
  Weight max_weight() const noexcept { return max_weight_; }

  std::optional<Weight> weight(NodeIndex from, NodeIndex to) const;
  std::optional<double> rate(NodeIndex from, NodeIndex to) const;

  /// Adjacency matrix with the given diagonal (0 for shortest paths).
  DistanceMatrix adjacency(Weight diagonal = 0) const;

 private:
  std::optional<std::size_t> find(NodeIndex from, NodeIndex to) const;

  std::size_t n_;
  std::vector<WeightedEdge> edges_;
  std::vector<double> rates_;
  TransformParams params_;
  Weight max_weight_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// Largest edge weight for which any path of n - 1 edges stays below kInf.
Weight max_safe_weight(std::size_t n);

/// Throws std::overflow_error when the largest weight exceeds
/// max_safe_weight(n).
TransformedGraph transform(const ExchangeGraph& graph, std::int64_t weight_multiplier);

struct UniquenessStats {
  std::size_t total_edges = 0;
  std::size_t distinct_original = 0;
  std::size_t distinct_transformed = 0;
  double fraction = 1.0;  // distinct_transformed / distinct_original
};

UniquenessStats uniqueness_stats(const ExchangeGraph& graph, std::int64_t weight_multiplier);

struct BackmappedCycle {
  std::vector<double> rates;  // traversal order, closing hop last
  double product = 1.0;
};

/// Looks the original rates of a closed walk back up. Throws
/// std::invalid_argument for fewer than two nodes or a missing edge.
BackmappedCycle backmap_cycle(std::span<const NodeIndex> nodes, const TransformedGraph& graph);

}  // namespace arbcycle
