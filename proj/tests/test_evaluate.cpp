#include <doctest.h>

#include <cmath>
#include <random>

#include "arbcycle/evaluate.hpp"
#include "oracles.hpp"

using namespace arbcycle;

namespace {

ExchangeGraph planted_triangle() {
  const std::vector<Node> nodes{{0, "M1", "A"}, {1, "M1", "B"}, {2, "M1", "C"}};
  const std::vector<Edge> edges{{0, 1, 10.0, EdgeKind::quoted, 10.0 * 0.0999},
                                {1, 0, 0.0999, EdgeKind::spread_reverse, 10.0 * 0.0999},
                                {1, 2, 5.0},
                                {2, 0, 0.021}};
  return ExchangeGraph(nodes, edges);
}

// Random rate graph on n nodes at one market.
ExchangeGraph random_rates(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({i, "M1", "C" + std::to_string(i)});
  std::bernoulli_distribution present(p);
  std::uniform_real_distribution<double> exponent(-3.0, 3.0);
  std::vector<Edge> edges;
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v)
      if (u != v && present(rng)) edges.push_back({u, v, std::pow(10.0, exponent(rng))});
  return ExchangeGraph(nodes, edges);
}

}  // namespace

TEST_SUITE("evaluate") {

TEST_CASE("planted rates give five percent") {
  const auto g = planted_triangle();
  const std::vector<NodeIndex> cycle{0, 1, 2};
  const auto r = evaluate_cycle(cycle, g);
  CHECK(*r.cycle.product == doctest::Approx(1.05).epsilon(1e-14));
  CHECK(*r.cycle.profit_pct == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(r.is_profitable);
  CHECK(r.path == std::vector<std::string>{"M1/A", "M1/B", "M1/C", "M1/A"});
  CHECK(r.steps.size() == r.cycle.length());
  CHECK(r.steps[0] == "Buy B in M1, using A");
}

TEST_CASE("round trip reports its epsilon exactly") {
  const auto g = planted_triangle();
  for (const auto& cycle : {std::vector<NodeIndex>{0, 1}, std::vector<NodeIndex>{1, 0}}) {
    const auto r = evaluate_cycle(cycle, g);
    CHECK(*r.cycle.product == *g.edges()[0].epsilon);
    CHECK(*r.cycle.profit_pct == doctest::Approx(-0.1).epsilon(1e-9));
    CHECK_FALSE(r.is_profitable);
  }
}

TEST_CASE("transfer hops render as sell and buy through a base currency") {
  const std::vector<Quote> quotes{{"M3", "JPY", "USD", 0.009}, {"M4", "JPY", "USD", 0.0091}};
  const auto g = build_graph(quotes);
  const std::vector<NodeIndex> cycle{*g.find_node("M3", "JPY"), *g.find_node("M4", "JPY"),
                                     *g.find_node("M4", "USD"), *g.find_node("M3", "USD")};
  const auto r = evaluate_cycle(cycle, g);
  CHECK(r.steps == std::vector<std::string>{
                       "Sell JPY in M3 and buy JPY in M4 via a common base currency",
                       "Buy USD in M4, using JPY",
                       "Sell USD in M4 and buy USD in M3 via a common base currency",
                       "Buy JPY in M3, using USD"});
  CHECK(r.path == std::vector<std::string>{"M3/JPY", "M4/JPY", "M4/USD", "M3/USD", "M3/JPY"});
}

TEST_CASE("json report carries every field") {
  const auto g = planted_triangle();
  const auto t = transform(g, 1000);
  const std::vector<NodeIndex> cycle{0, 1, 2};
  const auto j = to_json(evaluate_cycle(cycle, g, t));
  for (const char* key : {"path", "product", "profit_pct", "is_profitable", "sum_weight", "steps"})
    CHECK(j.contains(key));
  CHECK(j["sum_weight"].get<Weight>() ==
        *t.weight(0, 1) + *t.weight(1, 2) + *t.weight(2, 0));
}

TEST_CASE("non-cycles are rejected") {
  const auto g = planted_triangle();
  const std::vector<NodeIndex> one{0};
  CHECK_THROWS_AS(evaluate_cycle(one, g), std::invalid_argument);
  const std::vector<NodeIndex> broken{0, 2, 1};
  CHECK_THROWS_AS(evaluate_cycle(broken, g), std::invalid_argument);
  const std::vector<NodeIndex> outside{0, 7};
  CHECK_THROWS_AS(evaluate_cycle(outside, g), std::invalid_argument);
}

TEST_CASE("brute force on tiny graphs") {
  const std::vector<WeightedEdge> three{{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};
  const auto r = brute_force_best_cycle(DistanceMatrix::adjacency(3, three, kInf), {});
  REQUIRE(r);
  CHECK(*r->sum_weight == 6);
  CHECK(r->nodes == std::vector<NodeIndex>{0, 1, 2});
  CHECK_FALSE(brute_force_best_cycle(DistanceMatrix::adjacency(4, {}, kInf), {}));

  const auto g = planted_triangle();
  const auto best = brute_force_best_cycle(g, {CycleObjective::max_product, MinLength::two, 9, 64});
  REQUIRE(best);
  CHECK(best->nodes == std::vector<NodeIndex>{0, 1, 2});
  CHECK(*best->product == doctest::Approx(1.05).epsilon(1e-14));
}

TEST_CASE("planted synthetic of five nodes") {
  SyntheticSpec spec{1, 5, 0.0001, PlantedCycle{3, 1.05}, 2, std::nullopt};
  const auto g = build_graph(gen_synthetic(spec));
  CHECK(g.node_count() == 5);
  const auto best = brute_force_best_cycle(g, {CycleObjective::max_product, MinLength::two, 9, 64});
  REQUIRE(best);
  CHECK(best->length() == 3);
  CHECK(*best->product == doctest::Approx(1.05).epsilon(1e-12));
}

TEST_CASE("guards") {
  const DistanceMatrix big(70, kInf);
  CHECK_THROWS_AS(brute_force_best_cycle(big, {}), std::invalid_argument);
  const auto g = planted_triangle();
  CHECK_THROWS_AS(brute_force_best_cycle(g, {CycleObjective::min_sum, MinLength::two, 9, 64}),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_best_cycle(DistanceMatrix(3), {CycleObjective::max_product}),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_best_cycle(DistanceMatrix(3), {CycleObjective::min_sum, MinLength::three, 2, 64}),
                  std::invalid_argument);
}

TEST_CASE("brute force matches exhaustive enumeration") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto edges = oracle::random_digraph(n, 0.45, 1, 20, rng);
    const auto adj = DistanceMatrix::adjacency(n, edges, kInf);
    for (const auto len : {MinLength::two, MinLength::three}) {
      const auto r = brute_force_best_cycle(adj, {CycleObjective::min_sum, len, 9, 64});
      const Weight expected = oracle::min_simple_cycle(adj, static_cast<std::size_t>(len));
      CHECK(r.has_value() == is_finite(expected));
      if (!r) continue;
      CHECK(*r->sum_weight == expected);
      CHECK(is_simple_cycle(r->nodes));
      CHECK(r->nodes.size() >= static_cast<std::size_t>(len));
      // Lexicographically first among the optimal cycles.
      std::vector<NodeIndex> first;
      oracle::for_each_simple_cycle(adj, [&](const std::vector<NodeIndex>& c) {
        if (c.size() >= static_cast<std::size_t>(len) && oracle::walk_weight(c, adj) == expected &&
            (first.empty() || c < first))
          first = c;
      });
      CHECK(r->nodes == first);
    }
  }
}

TEST_CASE("max product equals min pre-rounding log weight within a length") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_rates(4 + trial % 4, 0.6, rng);
    std::vector<double> rates;
    for (const auto& e : g.edges()) rates.push_back(e.rate);
    const auto stages = compute_weight_stages(rates, 1);
    for (std::size_t len = 2; len <= 5; ++len) {
      double best_product = 0.0, best_log = INFINITY;
      std::vector<NodeIndex> by_product, by_log;
      const auto adj = transform(g, 1).adjacency(kInf);
      oracle::for_each_simple_cycle(adj, [&](const std::vector<NodeIndex>& c) {
        if (c.size() != len) return;
        double product = 1.0, log_sum = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
          const auto e = *g.find_edge(c[i], c[(i + 1) % c.size()]);
          product *= g.edges()[e].rate;
          log_sum += stages.log[e];
        }
        if (product > best_product) best_product = product, by_product = c;
        if (log_sum < best_log) best_log = log_sum, by_log = c;
      });
      CHECK(by_product == by_log);
    }
  }
}

}  // TEST_SUITE
