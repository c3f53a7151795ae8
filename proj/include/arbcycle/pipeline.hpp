#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arbcycle/cycle.hpp"
#include "arbcycle/evaluate.hpp"
#include "arbcycle/snapshot.hpp"
#include "arbcycle/transform.hpp"

namespace arbcycle {

enum class Method { triangle, floyd, brute };

std::string_view to_string(Method method);
/// Throws std::invalid_argument for an unknown name.
Method parse_method(std::string_view name);

struct RunConfig {
  std::optional<std::string> input;
  SnapshotFormat format = SnapshotFormat::csv;
  std::optional<std::string> synthetic;
  std::int64_t weight_multiplier = 10'000'000;
  double epsilon_lo = 0.99999;
  double epsilon_hi = 0.999999;
  double transfer_epsilon = 0.9999;
  Method method = Method::triangle;
  MinLength min_length = MinLength::three;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  std::vector<std::int64_t> c_values{100, 1'000, 100'000, 1'000'000, 10'000'000};
  std::size_t brute_max_length = 9;
  std::size_t brute_node_cap = 64;
  bool timings = true;  // compare only; off makes the output reproducible

  GraphOptions graph_options() const;
  /// Throws std::invalid_argument unless exactly one input source is set,
  /// c >= 1 and the epsilon range is ordered inside (0, 1].
  void validate() const;
};

/// Comma-separated items: `full`, `planted:L:P`, `markets=N`,
/// `currencies=N`, `density=X`, `dispersion=X`. `full` selects 16 markets and
/// 110 currencies at the full-shape density. Throws std::invalid_argument.
SyntheticSpec parse_synthetic_spec(std::string_view text, std::uint64_t seed);

/// Quotes from the configured input file or synthetic spec.
std::vector<Quote> load_quotes(const RunConfig& config);

/// Minimum transformed-weight cycle by the chosen method. The triangle method
/// reconstructs the cycle from witnesses; all methods set nodes and
/// sum_weight.
std::optional<CycleReport> find_min_cycle(const TransformedGraph& graph, Method method,
                                          const RunConfig& config);

struct CommandResult {
  int exit_code = 0;   // 0 found / done, 2 no cycle, 1 error
  std::string body;    // stdout or --output content
  std::string summary; // human-readable, for stderr
};

CommandResult cmd_ingest(const RunConfig& config);
CommandResult cmd_gen_synthetic(const RunConfig& config);
CommandResult cmd_transform_stats(const RunConfig& config);
CommandResult cmd_find_cycle(const RunConfig& config);
CommandResult cmd_compare(const RunConfig& config);

}  // namespace arbcycle
