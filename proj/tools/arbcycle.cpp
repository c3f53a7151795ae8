// arbcycle: detect profitable trade cycles in exchange-rate snapshots.
//
//   arbcycle find-cycle --synthetic planted:3:1.05 --method triangle
//   arbcycle compare --input snapshot.csv --min-length 2
//   arbcycle gen-synthetic --synthetic full --seed 7 --output full.csv
//
// Reports are JSON on stdout (or --output); summaries go to stderr.
// Exit status: 0 found, 2 no qualifying cycle, 1 error.

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "arbcycle/pipeline.hpp"

namespace {

using arbcycle::CommandResult;
using arbcycle::RunConfig;

struct Options {
  RunConfig config;
  std::string format = "csv";
  std::string method = "triangle";
  int min_length = 3;
  bool include_two_cycles = false;
  bool omit_timings = false;
};

void add_input(CLI::App& cmd, Options& o) {
  auto* input = cmd.add_option("--input", o.config.input, "Snapshot file");
  cmd.add_option("--format", o.format, "Snapshot format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  auto* synthetic = cmd.add_option(
      "--synthetic", o.config.synthetic,
      "Synthetic snapshot: comma-separated full | planted:L:P | markets=N | currencies=N | "
      "density=X | dispersion=X");
  input->excludes(synthetic);
  cmd.add_option("--seed", o.config.seed, "Seed for generation, spreads and witness sampling")
      ->capture_default_str();
  cmd.add_option("--epsilon-lo", o.config.epsilon_lo, "Lower bound of the quote spread factor")
      ->capture_default_str();
  cmd.add_option("--epsilon-hi", o.config.epsilon_hi, "Upper bound of the quote spread factor")
      ->capture_default_str();
  cmd.add_option("--transfer-epsilon", o.config.transfer_epsilon,
                 "Rate of moving a currency between markets")
      ->capture_default_str();
  cmd.add_option("--output", o.config.output, "Write the report here instead of stdout");
}

void add_search(CLI::App& cmd, Options& o) {
  cmd.add_option("-c,--weight-multiplier", o.config.weight_multiplier,
                 "Integer multiplier c of the log weights")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--min-length", o.min_length, "Shortest cycle to report")
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  cmd.add_flag("--include-two-cycles", o.include_two_cycles, "Same as --min-length 2");
  cmd.add_option("--max-brute-length", o.config.brute_max_length,
                 "Longest cycle the brute-force search enumerates")
      ->capture_default_str();
  cmd.add_option("--brute-node-cap", o.config.brute_node_cap,
                 "Largest graph the brute-force search accepts")
      ->capture_default_str();
}

int emit(const CommandResult& r, const RunConfig& config) {
  if (config.output) {
    std::ofstream out(*config.output, std::ios::binary);
    out << r.body;
    if (!out) {
      std::cerr << "error: cannot write '" << *config.output << "'\n";
      return 1;
    }
  } else {
    std::cout << r.body;
  }
  if (!r.summary.empty()) std::cerr << r.summary << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profitable trade cycle detection on exchange-rate graphs"};
  app.require_subcommand(1);

  Options o;
  std::function<CommandResult(const RunConfig&)> run;

  auto* ingest = app.add_subcommand("ingest", "Parse a snapshot and print graph statistics");
  add_input(*ingest, o);
  ingest->callback([&] { run = arbcycle::cmd_ingest; });

  auto* gen = app.add_subcommand("gen-synthetic", "Write a synthetic snapshot as CSV");
  add_input(*gen, o);
  gen->callback([&] { run = arbcycle::cmd_gen_synthetic; });

  auto* stats = app.add_subcommand("transform-stats", "Distinct transformed weights per c");
  add_input(*stats, o);
  stats->add_option("--c-values", o.config.c_values, "Multipliers to sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stats->callback([&] { run = arbcycle::cmd_transform_stats; });

  auto* find = app.add_subcommand("find-cycle", "Report the minimum weight cycle");
  add_input(*find, o);
  add_search(*find, o);
  find->add_option("--method", o.method, "Search method")
      ->check(CLI::IsMember({"triangle", "floyd", "brute"}))
      ->capture_default_str();
  find->callback([&] { run = arbcycle::cmd_find_cycle; });

  auto* compare = app.add_subcommand("compare", "Run every method and compare the results");
  add_input(*compare, o);
  add_search(*compare, o);
  compare->add_flag("--omit-timings", o.omit_timings, "Leave wall-clock times out of the report");
  compare->callback([&] { run = arbcycle::cmd_compare; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto& config = o.config;
    if (gen->parsed() && !config.synthetic && !config.input) config.synthetic = "full";
    config.format = o.format == "json" ? arbcycle::SnapshotFormat::json
                                       : arbcycle::SnapshotFormat::csv;
    config.method = arbcycle::parse_method(o.method);
    config.min_length = (o.include_two_cycles || o.min_length == 2) ? arbcycle::MinLength::two
                                                                    : arbcycle::MinLength::three;
    config.timings = !o.omit_timings;
    config.validate();
    return emit(run(config), config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
