#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "arbcycle/pipeline.hpp"

using namespace arbcycle;
using nlohmann::json;

namespace {

RunConfig synthetic(const std::string& spec, std::uint64_t seed = 0) {
  RunConfig c;
  c.synthetic = spec;
  c.seed = seed;
  return c;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("arbcycle_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("synthetic spec grammar") {
  const auto full = parse_synthetic_spec("full", 3);
  CHECK(full.markets == 16);
  CHECK(full.currencies == 110);
  CHECK(full.seed == 3);
  CHECK_FALSE(full.planted);

  const auto p = parse_synthetic_spec("planted:4:1.2,markets=2,currencies=9,density=0.3,dispersion=1e-6", 0);
  REQUIRE(p.planted);
  CHECK(p.planted->length == 4);
  CHECK(p.planted->product == 1.2);
  CHECK(p.markets == 2);
  CHECK(p.currencies == 9);
  CHECK(p.density == 0.3);
  CHECK(*p.dispersion == 1e-6);

  for (const char* bad : {"", "planted:3", "planted:x:1", "markets=", "colour=red", "huge"})
    CHECK_THROWS_AS(parse_synthetic_spec(bad, 0), std::invalid_argument);
}

TEST_CASE("config validation") {
  RunConfig none;
  CHECK_THROWS_AS(none.validate(), std::invalid_argument);
  auto both = synthetic("full");
  both.input = "x.csv";
  CHECK_THROWS_AS(both.validate(), std::invalid_argument);
  auto zero_c = synthetic("full");
  zero_c.weight_multiplier = 0;
  CHECK_THROWS_AS(zero_c.validate(), std::invalid_argument);
  auto eps = synthetic("full");
  eps.epsilon_lo = 0.9999999;
  CHECK_THROWS_AS(eps.validate(), std::invalid_argument);
  CHECK_THROWS_AS(cmd_gen_synthetic(synthetic("markets=0")), std::invalid_argument);
  CHECK(parse_method("floyd") == Method::floyd);
  CHECK_THROWS_AS(parse_method("dijkstra"), std::invalid_argument);
}

TEST_CASE("default c sweep and search settings") {
  CHECK(RunConfig{}.c_values == std::vector<std::int64_t>{100, 1'000, 100'000, 1'000'000, 10'000'000});
  CHECK(RunConfig{}.weight_multiplier == 10'000'000);
  CHECK(RunConfig{}.min_length == MinLength::three);
}

TEST_CASE("planted cycle found by every method") {
  auto config = synthetic("planted:3:1.05");
  std::vector<json> reports;
  for (const auto m : {Method::triangle, Method::floyd, Method::brute}) {
    config.method = m;
    const auto r = cmd_find_cycle(config);
    CHECK(r.exit_code == 0);
    reports.push_back(json::parse(r.body));
  }
  const auto& tri = reports[0];
  CHECK(tri["found"] == true);
  CHECK(tri["length"] == 3);
  CHECK(tri["profit_pct"].get<double>() == doctest::Approx(5.0).epsilon(1e-6));
  for (const auto& r : reports) {
    CHECK(r["path"] == tri["path"]);
    CHECK(r["sum_weight"] == tri["sum_weight"]);
  }
}

TEST_CASE("two-node snapshot has no cycle of length three") {
  auto config = synthetic("markets=1,currencies=2");
  const auto r = cmd_find_cycle(config);
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.body)["found"] == false);
  config.min_length = MinLength::two;
  CHECK(cmd_find_cycle(config).exit_code == 0);
}

TEST_CASE("outputs are byte-identical for identical configs") {
  auto config = synthetic("markets=4,currencies=20,density=0.4", 17);
  CHECK(cmd_find_cycle(config).body == cmd_find_cycle(config).body);
  CHECK(cmd_gen_synthetic(config).body == cmd_gen_synthetic(config).body);
  CHECK(cmd_transform_stats(config).body == cmd_transform_stats(config).body);
  config.timings = false;
  CHECK(cmd_compare(config).body == cmd_compare(config).body);
  auto other = config;
  other.seed = 18;
  CHECK(cmd_gen_synthetic(config).body != cmd_gen_synthetic(other).body);
}

TEST_CASE("generated snapshot re-ingests to the same cycle") {
  auto config = synthetic("planted:3:1.03,markets=3,currencies=10", 5);
  const auto csv = cmd_gen_synthetic(config).body;
  RunConfig from_file;
  from_file.input = temp_file("planted.csv", csv);
  from_file.seed = 5;
  from_file.method = Method::brute;
  const auto direct = json::parse(cmd_find_cycle(config).body);
  const auto reread = json::parse(cmd_find_cycle(from_file).body);
  CHECK(direct["path"] == reread["path"]);
  CHECK(reread["length"] == 3);
  CHECK(reread["product"].get<double>() == doctest::Approx(1.03).epsilon(1e-9));
  std::remove(from_file.input->c_str());
}

TEST_CASE("ingest and transform statistics") {
  const auto stats = json::parse(cmd_ingest(synthetic("full", 1)).body);
  CHECK(stats["n_nodes"] == 243);
  CHECK(stats["n_edges"] == 1718);
  CHECK(stats["n_markets"] == 16);

  RunConfig single;
  single.input = temp_file("single.csv", "market,base,quote,ask\nM1,BTC,USD,11000.0\n");
  const auto t = json::parse(cmd_transform_stats(single).body);
  for (const auto& row : t["rows"]) CHECK(row["fraction"].get<double>() == 1.0);
  std::remove(single.input->c_str());
}

TEST_CASE("compare agrees on a small random snapshot and omits brute on large ones") {
  auto small = synthetic("markets=2,currencies=5,density=0.8", 4);
  small.timings = false;
  small.min_length = MinLength::two;
  auto r = cmd_compare(small);
  auto j = json::parse(r.body);
  CHECK(r.exit_code == 0);
  CHECK(j["agree"] == true);
  CHECK(j["methods"].contains("brute"));
  CHECK_FALSE(j["methods"]["triangle"].contains("seconds"));

  auto large = synthetic("full", 1);
  r = cmd_compare(large);
  j = json::parse(r.body);
  CHECK(r.exit_code == 0);
  CHECK_FALSE(j["methods"].contains("brute"));
  CHECK(j["methods"]["triangle"]["sum_weight"] == j["methods"]["floyd"]["sum_weight"]);
  CHECK(j["methods"]["triangle"].contains("seconds"));
}

TEST_CASE("empty snapshot reports no cycle everywhere") {
  RunConfig empty;
  empty.input = temp_file("empty.csv", "market,base,quote,ask\n");
  const auto r = cmd_compare(empty);
  CHECK(r.exit_code == 2);
  const auto j = json::parse(r.body);
  for (const char* m : {"triangle", "floyd", "brute"}) CHECK(j["methods"][m]["found"] == false);
  std::remove(empty.input->c_str());
}

TEST_CASE("missing input file is an error") {
  RunConfig missing;
  missing.input = "/nonexistent/snapshot.csv";
  CHECK_THROWS(cmd_find_cycle(missing));
}

}  // TEST_SUITE
