#include "arbcycle/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace arbcycle {
namespace {

std::string render_step(const Node& from, const Node& to, EdgeKind kind) {
  if (kind == EdgeKind::transfer)
    return "Sell " + from.currency + " in " + from.market + " and buy " + to.currency + " in " +
           to.market + " via a common base currency";
  return "Buy " + to.currency + " in " + to.market + ", using " + from.currency;
}

struct Arc {
  NodeIndex to;
  Weight weight;
  double rate;
};

class CycleEnumerator {
 public:
  CycleEnumerator(std::vector<std::vector<Arc>> arcs, const BruteForceOptions& options)
      : arcs_(std::move(arcs)), options_(options), on_path_(arcs_.size(), false) {
    for (auto& out : arcs_)
      std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }

  std::optional<CycleReport> run() {
    for (NodeIndex start = 0; start < arcs_.size(); ++start) {
      path_.assign(1, start);
      on_path_[start] = true;
      visit(start, start, 0, 1.0);
      on_path_[start] = false;
    }
    if (!found_) return std::nullopt;
    CycleReport r;
    r.nodes = best_nodes_;
    return r;
  }

 private:
  bool min_sum() const { return options_.objective == CycleObjective::min_sum; }

  void visit(NodeIndex start, NodeIndex u, Weight sum, double product) {
    for (const auto& arc : arcs_[u]) {
      const Weight next_sum = sat_add(sum, arc.weight);
      const double next_product = product * arc.rate;
      if (arc.to == start) {
        if (path_.size() >= static_cast<std::size_t>(options_.min_length))
          consider(next_sum, next_product);
        continue;
      }
      if (arc.to < start || on_path_[arc.to] || path_.size() >= options_.max_length) continue;
      if (min_sum() && found_ && next_sum >= best_sum_) continue;
      path_.push_back(arc.to);
      on_path_[arc.to] = true;
      visit(start, arc.to, next_sum, next_product);
      on_path_[arc.to] = false;
      path_.pop_back();
    }
  }

  void consider(Weight sum, double product) {
    const bool better = !found_ || (min_sum() ? sum < best_sum_ : product > best_product_);
    if (!better) return;
    found_ = true;
    best_sum_ = sum;
    best_product_ = product;
    best_nodes_ = path_;
  }

  std::vector<std::vector<Arc>> arcs_;
  BruteForceOptions options_;
  std::vector<bool> on_path_;
  std::vector<NodeIndex> path_;
  bool found_ = false;
  Weight best_sum_ = kInf;
  double best_product_ = 0.0;
  std::vector<NodeIndex> best_nodes_;
};

void check_options(std::size_t n, const BruteForceOptions& options) {
  if (n > options.node_cap)
    throw std::invalid_argument("brute force: " + std::to_string(n) + " nodes exceed the cap of " +
                                std::to_string(options.node_cap));
  if (options.max_length < static_cast<std::size_t>(options.min_length))
    throw std::invalid_argument("brute force: max_length below min_length");
}

void fill_product(CycleReport& r, double product) {
  r.product = product;
  r.profit_pct = (product - 1.0) * 100.0;
}

}  // namespace

ProfitReport evaluate_cycle(std::span<const NodeIndex> nodes, const ExchangeGraph& graph) {
  if (nodes.size() < 2) throw std::invalid_argument("evaluate: a cycle needs at least two nodes");
  ProfitReport report;
  report.cycle.nodes.assign(nodes.begin(), nodes.end());
  double product = 1.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeIndex from = nodes[i];
    const NodeIndex to = nodes[(i + 1) % nodes.size()];
    const auto edge = from < graph.node_count() && to < graph.node_count()
                          ? graph.find_edge(from, to)
                          : std::nullopt;
    if (!edge)
      throw std::invalid_argument("evaluate: no edge " + std::to_string(from) + " -> " +
                                  std::to_string(to));
    const auto& e = graph.edges()[*edge];
    product *= e.rate;
    report.path.push_back(graph.node(from).label());
    report.steps.push_back(render_step(graph.node(from), graph.node(to), e.kind));
  }
  report.path.push_back(graph.node(nodes.front()).label());
  fill_product(report.cycle, product);
  report.is_profitable = product > 1.0;
  return report;
}

ProfitReport evaluate_cycle(std::span<const NodeIndex> nodes, const ExchangeGraph& graph,
                            const TransformedGraph& transformed) {
  auto report = evaluate_cycle(nodes, graph);
  Weight sum = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto w = transformed.weight(nodes[i], nodes[(i + 1) % nodes.size()]);
    if (!w) throw std::invalid_argument("evaluate: transformed graph lacks a cycle edge");
    sum = sat_add(sum, *w);
  }
  report.cycle.sum_weight = sum;
  return report;
}

nlohmann::json to_json(const ProfitReport& report) {
  nlohmann::json j;
  j["path"] = report.path;
  j["product"] = report.cycle.product.value_or(0.0);
  j["profit_pct"] = report.cycle.profit_pct.value_or(0.0);
  j["is_profitable"] = report.is_profitable;
  j["sum_weight"] = report.cycle.sum_weight ? nlohmann::json(*report.cycle.sum_weight) : nullptr;
  j["steps"] = report.steps;
  j["length"] = report.cycle.length();
  return j;
}

std::optional<CycleReport> brute_force_best_cycle(const ExchangeGraph& graph,
                                                  const BruteForceOptions& options) {
  if (options.objective != CycleObjective::max_product)
    throw std::invalid_argument("brute force: rate graphs support max_product only");
  check_options(graph.node_count(), options);
  std::vector<std::vector<Arc>> arcs(graph.node_count());
  for (const auto& e : graph.edges()) arcs[e.from].push_back({e.to, 0, e.rate});
  auto r = CycleEnumerator(std::move(arcs), options).run();
  if (!r) return r;
  double product = 1.0;
  for (std::size_t i = 0; i < r->nodes.size(); ++i)
    product *= graph.edges()[*graph.find_edge(r->nodes[i], r->nodes[(i + 1) % r->nodes.size()])].rate;
  fill_product(*r, product);
  return r;
}

std::optional<CycleReport> brute_force_best_cycle(const TransformedGraph& graph,
                                                  const BruteForceOptions& options) {
  check_options(graph.node_count(), options);
  std::vector<std::vector<Arc>> arcs(graph.node_count());
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const auto& e = graph.edges()[i];
    arcs[e.from].push_back({e.to, e.weight, graph.rates()[i]});
  }
  auto r = CycleEnumerator(std::move(arcs), options).run();
  if (!r) return r;
  const auto back = backmap_cycle(r->nodes, graph);
  Weight sum = 0;
  for (std::size_t i = 0; i < r->nodes.size(); ++i)
    sum += *graph.weight(r->nodes[i], r->nodes[(i + 1) % r->nodes.size()]);
  r->sum_weight = sum;
  fill_product(*r, back.product);
  return r;
}

std::optional<CycleReport> brute_force_best_cycle(const DistanceMatrix& adjacency,
                                                  const BruteForceOptions& options) {
  if (options.objective != CycleObjective::min_sum)
    throw std::invalid_argument("brute force: weight matrices support min_sum only");
  const std::size_t n = adjacency.size();
  check_options(n, options);
  std::vector<std::vector<Arc>> arcs(n);
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v)
      if (u != v && is_finite(adjacency(u, v))) arcs[u].push_back({v, adjacency(u, v), 1.0});
  auto r = CycleEnumerator(std::move(arcs), options).run();
  if (r) r->sum_weight = cycle_weight(r->nodes, adjacency);
  return r;
}

}  // namespace arbcycle
