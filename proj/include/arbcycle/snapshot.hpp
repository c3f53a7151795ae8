#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbcycle/distance_matrix.hpp"

namespace arbcycle {

/// One ask price: `ask` units of `quote` buy one unit of `base` at `market`,
/// i.e. trading base -> quote yields `ask` per unit.
struct Quote {
  std::string market;
  std::string base;
  std::string quote;
  double ask = 0.0;

  friend bool operator==(const Quote&, const Quote&) = default;
};

enum class SnapshotFormat { csv, json };

/// Raised for malformed snapshot input. `line()` is 1-based for CSV and the
/// 1-based array position for JSON.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

std::vector<Quote> parse_snapshot(std::istream& in, SnapshotFormat format);
std::vector<Quote> parse_snapshot(std::string_view text, SnapshotFormat format);

/// Writes the CSV form (header `market,base,quote,ask`) with round-trip
/// precision for the ask column.
void write_snapshot_csv(std::ostream& out, std::span<const Quote> quotes);

/// Throws std::invalid_argument if a quote breaks the snapshot invariants
/// (positive ask, base != quote, unique (market, base, quote)).
void validate_quotes(std::span<const Quote> quotes);

struct Node {
  NodeIndex index = 0;
  std::string market;
  std::string currency;

  /// "M3/JPY"
  std::string label() const { return market + "/" + currency; }
};

enum class EdgeKind {
  quoted,          // explicit ask from the snapshot
  spread_reverse,  // synthetic reverse of a quote, rate = epsilon / ask
  transfer,        // same currency moved between two markets
};

struct Edge {
  NodeIndex from = 0;
  NodeIndex to = 0;
  double rate = 0.0;
  EdgeKind kind = EdgeKind::quoted;
  // Spread of the quote/reverse pair this edge belongs to, stored as the
  // product of the two rates so that rate(u,v) * rate(v,u) == epsilon holds
  // bit for bit. Empty for transfers and for pairs quoted in both directions.
  std::optional<double> epsilon;
};

/// Directed simple graph over (market, currency) nodes weighted by exchange
/// rates. Immutable once built.
class ExchangeGraph {
 public:
  ExchangeGraph() = default;
  /// Validates indices, rates > 0, and the absence of self loops and
  /// parallel edges.
  ExchangeGraph(std::vector<Node> nodes, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Node& node(NodeIndex i) const { return nodes_.at(i); }

  std::optional<std::size_t> find_edge(NodeIndex from, NodeIndex to) const;
  std::optional<NodeIndex> find_node(std::string_view market, std::string_view currency) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::map<std::pair<NodeIndex, NodeIndex>, std::size_t> edge_index_;
};

struct GraphOptions {
  double epsilon_lo = 0.99999;
  double epsilon_hi = 0.999999;
  double transfer_epsilon = 0.9999;
  std::uint64_t seed = 0;
};

/// Nodes are numbered in order of first appearance (base before quote).
/// Each quote yields a forward edge and, unless the opposite direction is
/// quoted at the same market, a reverse edge with rate epsilon / ask, one
/// seeded epsilon draw per pair. Every currency listed at two or more markets
/// gets transfer edges in both directions between each pair of its nodes.
ExchangeGraph build_graph(std::span<const Quote> quotes, const GraphOptions& options = {});

struct SnapshotStats {
  std::size_t n_markets = 0;
  std::size_t n_currencies = 0;
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  double min_rate = 0.0;
  double max_rate = 0.0;
};

SnapshotStats snapshot_stats(const ExchangeGraph& graph);

struct PlantedCycle {
  std::size_t length = 3;
  double product = 1.05;
};

/// Parameters for the synthetic snapshot generator.
///
/// Currencies are ranked by popularity: popular ones are listed at many
/// markets, the tail at one. Inside a market every currency is quoted
/// against the market's most popular currency; any other pair is quoted with
/// probability `density`. Prices follow a global value per currency (spanning
/// roughly nine orders of magnitude) perturbed per market by `dispersion`.
///
/// With `planted`, the last `length` currencies form an isolated cycle at
/// market M1 whose rates multiply to `product`, and the background is kept
/// arbitrage-free: every other cycle multiplies to less than 1 as long as
/// epsilon_hi < 1 - 2e-7 and transfer_epsilon < 0.99997.
struct SyntheticSpec {
  std::size_t markets = 3;
  std::size_t currencies = 12;
  double density = 0.5;
  std::optional<PlantedCycle> planted;
  std::uint64_t seed = 0;
  // Relative per-market price deviation. Empty selects 1e-3 without a
  // planted cycle and 1e-5 with one.
  std::optional<double> dispersion;
};

/// Largest dispersion under which a planted snapshot stays arbitrage-free.
inline constexpr double kMaxPlantedDispersion = 1e-5;

/// Density that brings 16 markets x 110 currencies close to 243 nodes and
/// 1718 edges under the default graph options.
inline constexpr double kFullShapeDensity = 0.09;

std::vector<Quote> gen_synthetic(const SyntheticSpec& spec);

}  // namespace arbcycle
