#include "arbcycle/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "arbcycle/apsp.hpp"
#include "arbcycle/triangle.hpp"
#include "arbcycle/witness.hpp"

namespace arbcycle {
namespace {

using nlohmann::json;

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw std::invalid_argument("synthetic spec: bad " + std::string(what) + " '" +
                                std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

json stats_json(const ExchangeGraph& graph) {
  const auto s = snapshot_stats(graph);
  return {{"n_markets", s.n_markets}, {"n_currencies", s.n_currencies}, {"n_nodes", s.n_nodes},
          {"n_edges", s.n_edges},     {"min_rate", s.min_rate},         {"max_rate", s.max_rate}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ExchangeGraph load_graph(const RunConfig& config) {
  return build_graph(load_quotes(config), config.graph_options());
}

BruteForceOptions brute_options(const RunConfig& config) {
  BruteForceOptions o;
  o.objective = CycleObjective::min_sum;
  o.min_length = config.min_length;
  o.max_length = config.brute_max_length;
  o.node_cap = config.brute_node_cap;
  return o;
}

std::string describe(const ProfitReport& r) {
  std::ostringstream s;
  s << r.cycle.length() << "-cycle";
  for (const auto& label : r.path) s << (&label == &r.path.front() ? " " : " -> ") << label;
  s << "\nproduct " << *r.cycle.product << " (" << *r.cycle.profit_pct << " %)";
  for (const auto& step : r.steps) s << "\n  " << step;
  return s.str();
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::triangle: return "triangle";
    case Method::floyd: return "floyd";
    case Method::brute: return "brute";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "triangle") return Method::triangle;
  if (name == "floyd") return Method::floyd;
  if (name == "brute") return Method::brute;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

GraphOptions RunConfig::graph_options() const {
  return {epsilon_lo, epsilon_hi, transfer_epsilon, seed};
}

void RunConfig::validate() const {
  if (input.has_value() == synthetic.has_value())
    throw std::invalid_argument("give exactly one of --input and --synthetic");
  if (weight_multiplier < 1) throw std::invalid_argument("weight multiplier must be >= 1");
  if (!(epsilon_lo > 0.0 && epsilon_lo <= epsilon_hi && epsilon_hi <= 1.0))
    throw std::invalid_argument("epsilon range must satisfy 0 < lo <= hi <= 1");
  if (!(transfer_epsilon > 0.0 && transfer_epsilon <= 1.0))
    throw std::invalid_argument("transfer epsilon must lie in (0, 1]");
}

SyntheticSpec parse_synthetic_spec(std::string_view text, std::uint64_t seed) {
  SyntheticSpec spec;
  spec.seed = seed;
  if (text.empty()) throw std::invalid_argument("synthetic spec is empty");
  for (const auto item : split(text, ',')) {
    if (item == "full") {
      spec.markets = 16;
      spec.currencies = 110;
      spec.density = kFullShapeDensity;
    } else if (item.starts_with("planted:")) {
      const auto parts = split(item, ':');
      if (parts.size() != 3) throw std::invalid_argument("synthetic spec: use planted:L:P");
      spec.planted = PlantedCycle{parse_number<std::size_t>(parts[1], "cycle length"),
                                  parse_number<double>(parts[2], "cycle product")};
    } else if (const auto eq = item.find('='); eq != std::string_view::npos) {
      const auto key = item.substr(0, eq);
      const auto value = item.substr(eq + 1);
      if (key == "markets") spec.markets = parse_number<std::size_t>(value, key);
      else if (key == "currencies") spec.currencies = parse_number<std::size_t>(value, key);
      else if (key == "density") spec.density = parse_number<double>(value, key);
      else if (key == "dispersion") spec.dispersion = parse_number<double>(value, key);
      else throw std::invalid_argument("synthetic spec: unknown key '" + std::string(key) + "'");
    } else {
      throw std::invalid_argument("synthetic spec: unknown item '" + std::string(item) + "'");
    }
  }
  return spec;
}

std::vector<Quote> load_quotes(const RunConfig& config) {
  config.validate();
  if (config.synthetic) return gen_synthetic(parse_synthetic_spec(*config.synthetic, config.seed));
  std::ifstream in(*config.input, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + *config.input + "'");
  return parse_snapshot(in, config.format);
}

std::optional<CycleReport> find_min_cycle(const TransformedGraph& graph, Method method,
                                          const RunConfig& config) {
  switch (method) {
    case Method::brute:
      return brute_force_best_cycle(graph, brute_options(config));
    case Method::floyd:
      return floyd_warshall_min_cycle(graph.adjacency(kInf), config.min_length);
    case Method::triangle: {
      const auto distances = apsp_by_squaring(graph.adjacency(0));
      const auto tri = min_triangle(
          build_tripartite(graph, distances, config.min_length == MinLength::two));
      if (!tri) return std::nullopt;
      SamplerConfig sampler;
      sampler.seed = config.seed;
      const auto witnesses = path_witnesses(distances, sampler);
      CycleReport r;
      r.nodes = reconstruct_cycle(*tri, distances, witnesses, graph);
      r.sum_weight = tri->total;
      return r;
    }
  }
  throw std::invalid_argument("unknown method");
}

CommandResult cmd_ingest(const RunConfig& config) {
  const auto quotes = load_quotes(config);
  const auto graph = build_graph(quotes, config.graph_options());
  auto j = stats_json(graph);
  j["n_quotes"] = quotes.size();
  std::ostringstream summary;
  summary << quotes.size() << " quotes -> " << graph.node_count() << " nodes, "
          << graph.edge_count() << " edges";
  return {0, dump(j), summary.str()};
}

CommandResult cmd_gen_synthetic(const RunConfig& config) {
  const auto quotes = load_quotes(config);
  std::ostringstream body;
  write_snapshot_csv(body, quotes);
  return {0, body.str(), std::to_string(quotes.size()) + " quotes generated"};
}

CommandResult cmd_transform_stats(const RunConfig& config) {
  const auto graph = load_graph(config);
  std::vector<double> rates;
  for (const auto& e : graph.edges()) rates.push_back(e.rate);
  json rows = json::array();
  std::ostringstream summary;
  summary << "c, distinct transformed / distinct original";
  std::size_t total = graph.edge_count(), distinct = 0;
  for (const auto c : config.c_values) {
    const auto s = uniqueness_stats(graph, c);
    const auto stages = compute_weight_stages(rates, c);
    Weight lo = 0, hi = 0;
    if (!stages.integer.empty()) {
      const auto [mn, mx] = std::minmax_element(stages.integer.begin(), stages.integer.end());
      lo = *mn;
      hi = *mx;
    }
    distinct = s.distinct_original;
    rows.push_back({{"c", c},
                    {"distinct_transformed", s.distinct_transformed},
                    {"fraction", s.fraction},
                    {"share_of_edges", s.total_edges == 0 ? 1.0
                                                           : double(s.distinct_transformed) /
                                                                 double(s.total_edges)},
                    {"min_weight", lo},
                    {"max_weight", hi}});
    summary << "\n  " << c << ": " << s.distinct_transformed << " / " << s.distinct_original
            << " (" << s.fraction * 100.0 << " %)";
  }
  if (config.c_values.empty()) distinct = uniqueness_stats(graph, 1).distinct_original;
  json j = stats_json(graph);
  j["total_edges"] = total;
  j["distinct_original"] = distinct;
  j["rows"] = rows;
  return {0, dump(j), summary.str()};
}

CommandResult cmd_find_cycle(const RunConfig& config) {
  const auto graph = load_graph(config);
  const auto transformed = transform(graph, config.weight_multiplier);
  const auto cycle = find_min_cycle(transformed, config.method, config);
  json j;
  j["method"] = to_string(config.method);
  j["weight_multiplier"] = config.weight_multiplier;
  j["min_length"] = static_cast<int>(config.min_length);
  if (!cycle) {
    j["found"] = false;
    return {2, dump(j), "no qualifying cycle"};
  }
  const auto report = evaluate_cycle(cycle->nodes, graph, transformed);
  if (report.cycle.sum_weight != cycle->sum_weight)
    throw std::logic_error("reported cycle weight differs from the search result");
  j["found"] = true;
  j.update(to_json(report));
  return {0, dump(j), describe(report)};
}

CommandResult cmd_compare(const RunConfig& config) {
  const auto graph = load_graph(config);
  const auto transformed = transform(graph, config.weight_multiplier);
  std::vector<Method> methods{Method::triangle, Method::floyd};
  if (graph.node_count() <= config.brute_node_cap) methods.push_back(Method::brute);

  json results = json::object();
  std::ostringstream summary;
  std::optional<std::optional<Weight>> triangle_weight, floyd_weight;
  bool all_equal = true, any_found = false;
  std::optional<std::optional<Weight>> first;
  for (const auto method : methods) {
    const auto start = std::chrono::steady_clock::now();
    const auto cycle = find_min_cycle(transformed, method, config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    json entry;
    entry["found"] = cycle.has_value();
    std::optional<Weight> weight;
    if (cycle) {
      any_found = true;
      weight = cycle->sum_weight;
      const auto report = evaluate_cycle(cycle->nodes, graph, transformed);
      entry["sum_weight"] = *weight;
      entry["path"] = report.path;
      entry["product"] = *report.cycle.product;
      entry["profit_pct"] = *report.cycle.profit_pct;
    }
    if (config.timings) entry["seconds"] = elapsed.count();
    results[std::string(to_string(method))] = entry;
    if (!first) first = weight;
    else if (*first != weight) all_equal = false;
    if (method == Method::triangle) triangle_weight = weight;
    if (method == Method::floyd) floyd_weight = weight;
    summary << to_string(method) << ": "
            << (weight ? std::to_string(*weight) : std::string("no cycle"));
    if (config.timings) summary << " in " << elapsed.count() << " s";
    summary << "\n";
  }
  json j = stats_json(graph);
  j["weight_multiplier"] = config.weight_multiplier;
  j["min_length"] = static_cast<int>(config.min_length);
  j["methods"] = results;
  j["agree"] = all_equal;
  summary << (all_equal ? "all methods agree" : "methods disagree");
  // Triangle and Floyd-Warshall solve the same problem; a mismatch is a bug.
  const int code = triangle_weight != floyd_weight ? 1 : any_found ? 0 : 2;
  return {code, dump(j), summary.str()};
}

}  // namespace arbcycle
