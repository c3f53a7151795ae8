#include "arbcycle/transform.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace arbcycle {
namespace {

std::uint64_t edge_key(NodeIndex from, NodeIndex to) {
  return (static_cast<std::uint64_t>(from) << 32) | static_cast<std::uint64_t>(to);
}

}  // namespace

WeightStages compute_weight_stages(std::span<const double> rates, std::int64_t weight_multiplier) {
  if (weight_multiplier < 1) throw std::invalid_argument("weight multiplier must be >= 1");
  WeightStages s;
  s.params.weight_multiplier = weight_multiplier;
  const std::size_t m = rates.size();
  if (m == 0) return s;

  s.reciprocal.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(rates[i] > 0.0) || !std::isfinite(rates[i]))
      throw std::invalid_argument("rates must be positive and finite");
    s.reciprocal[i] = 1.0 / rates[i];
  }
  s.params.min_reciprocal = *std::min_element(s.reciprocal.begin(), s.reciprocal.end());
  s.params.scale = 1.0 / s.params.min_reciprocal;

  s.scaled.resize(m);
  s.log.resize(m);
  s.integer.resize(m);
  const double c = static_cast<double>(weight_multiplier);
  // 2^62: conversions below this bound are exact enough and cannot overflow.
  constexpr double kCastLimit = 4.611686018427387904e18;
  for (std::size_t i = 0; i < m; ++i) {
    s.scaled[i] = s.params.scale * s.reciprocal[i];
    s.log[i] = std::log(s.scaled[i]);
    const double raw = std::ceil(c * s.log[i]);
    if (!(raw < kCastLimit))
      throw std::overflow_error("weight multiplier too large: c * ln(w) does not fit a weight");
    s.integer[i] = std::max<Weight>(1, static_cast<Weight>(raw));
  }
  return s;
}

TransformedGraph::TransformedGraph(std::size_t n, std::vector<WeightedEdge> edges,
                                   std::vector<double> rates, TransformParams params)
    : n_(n), edges_(std::move(edges)), rates_(std::move(rates)), params_(params) {
  if (rates_.size() != edges_.size())
    throw std::invalid_argument("transformed graph: one rate per edge required");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.from >= n_ || e.to >= n_ || e.from == e.to)
      throw std::invalid_argument("transformed graph: bad edge endpoints");
    if (e.weight < 1) throw std::invalid_argument("transformed graph: weights must be >= 1");
    if (!lookup_.emplace(edge_key(e.from, e.to), i).second)
      throw std::invalid_argument("transformed graph: parallel edge");
    max_weight_ = std::max(max_weight_, e.weight);
  }
}

std::optional<std::size_t> TransformedGraph::find(NodeIndex from, NodeIndex to) const {
  const auto it = lookup_.find(edge_key(from, to));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Weight> TransformedGraph::weight(NodeIndex from, NodeIndex to) const {
  if (auto i = find(from, to)) return edges_[*i].weight;
  return std::nullopt;
}

std::optional<double> TransformedGraph::rate(NodeIndex from, NodeIndex to) const {
  if (auto i = find(from, to)) return rates_[*i];
  return std::nullopt;
}

DistanceMatrix TransformedGraph::adjacency(Weight diagonal) const {
  return DistanceMatrix::adjacency(n_, edges_, diagonal);
}

Weight max_safe_weight(std::size_t n) {
  return (kInf - 1) / static_cast<Weight>(std::max<std::size_t>(n, 1));
}

TransformedGraph transform(const ExchangeGraph& graph, std::int64_t weight_multiplier) {
  std::vector<double> rates;
  rates.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) rates.push_back(e.rate);
  const auto stages = compute_weight_stages(rates, weight_multiplier);

  const Weight bound = max_safe_weight(graph.node_count());
  std::vector<WeightedEdge> edges;
  edges.reserve(rates.size());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (stages.integer[i] > bound)
      throw std::overflow_error("transformed weight " + std::to_string(stages.integer[i]) +
                                " exceeds the safe path-sum bound " + std::to_string(bound));
    const auto& e = graph.edges()[i];
    edges.push_back(WeightedEdge{e.from, e.to, stages.integer[i]});
  }
  return TransformedGraph(graph.node_count(), std::move(edges), std::move(rates), stages.params);
}

UniquenessStats uniqueness_stats(const ExchangeGraph& graph, std::int64_t weight_multiplier) {
  std::vector<double> rates;
  rates.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) rates.push_back(e.rate);
  const auto stages = compute_weight_stages(rates, weight_multiplier);

  UniquenessStats s;
  s.total_edges = rates.size();
  s.distinct_original = std::set<double>(rates.begin(), rates.end()).size();
  s.distinct_transformed = std::set<Weight>(stages.integer.begin(), stages.integer.end()).size();
  s.fraction = s.distinct_original == 0
                   ? 1.0
                   : double(s.distinct_transformed) / double(s.distinct_original);
  return s;
}

BackmappedCycle backmap_cycle(std::span<const NodeIndex> nodes, const TransformedGraph& graph) {
  if (nodes.size() < 2) throw std::invalid_argument("a cycle needs at least two edges");
  BackmappedCycle out;
  out.rates.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeIndex from = nodes[i];
    const NodeIndex to = nodes[(i + 1) % nodes.size()];
    const auto r = graph.rate(from, to);
    if (!r)
      throw std::invalid_argument("no edge " + std::to_string(from) + " -> " + std::to_string(to));
    out.rates.push_back(*r);
    out.product *= *r;
  }
  return out;
}

}  // namespace arbcycle
