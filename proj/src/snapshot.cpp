#include "arbcycle/snapshot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "arbcycle/detail/random.hpp"

namespace arbcycle {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_ask(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty())
    throw ParseError("malformed ask '" + std::string(field) + "'", line);
  if (!std::isfinite(value)) throw ParseError("non-finite ask", line);
  if (value <= 0.0) throw ParseError("nonpositive ask", line);
  return value;
}

class QuoteCollector {
 public:
  void add(Quote q, std::size_t line) {
    if (q.market.empty() || q.base.empty() || q.quote.empty())
      throw ParseError("empty identifier", line);
    if (q.base == q.quote) throw ParseError("base equals quote currency", line);
    if (!seen_.emplace(q.market, q.base, q.quote).second)
      throw ParseError("duplicate quote " + q.market + "," + q.base + "," + q.quote, line);
    quotes_.push_back(std::move(q));
  }
  std::vector<Quote> take() { return std::move(quotes_); }

 private:
  std::set<std::tuple<std::string, std::string, std::string>> seen_;
  std::vector<Quote> quotes_;
};

std::vector<Quote> parse_csv(std::istream& in) {
  QuoteCollector out;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t columns = 0;  // 0 until the header is read
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (columns == 0) {
      if (fields.size() < 4 || fields.size() > 5 || fields[0] != "market" || fields[1] != "base" ||
          fields[2] != "quote" || fields[3] != "ask")
        throw ParseError("expected header 'market,base,quote,ask'", line_no);
      columns = fields.size();
      continue;
    }
    if (fields.size() != columns)
      throw ParseError("expected " + std::to_string(columns) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    out.add(Quote{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                  parse_ask(fields[3], line_no)},
            line_no);
  }
  return out.take();
}

std::vector<Quote> parse_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of quotes", 0);
  QuoteCollector out;
  std::size_t pos = 0;
  for (const auto& item : doc) {
    ++pos;
    if (!item.is_object()) throw ParseError("expected an object", pos);
    for (const char* key : {"market", "base", "quote"})
      if (!item.contains(key) || !item[key].is_string())
        throw ParseError(std::string("missing string field '") + key + "'", pos);
    if (!item.contains("ask") || !item["ask"].is_number())
      throw ParseError("missing numeric field 'ask'", pos);
    const double ask = item["ask"].get<double>();
    if (!std::isfinite(ask)) throw ParseError("non-finite ask", pos);
    if (ask <= 0.0) throw ParseError("nonpositive ask", pos);
    out.add(Quote{item["market"].get<std::string>(), item["base"].get<std::string>(),
                  item["quote"].get<std::string>(), ask},
            pos);
  }
  return out.take();
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::vector<Quote> parse_snapshot(std::istream& in, SnapshotFormat format) {
  return format == SnapshotFormat::csv ? parse_csv(in) : parse_json(in);
}

std::vector<Quote> parse_snapshot(std::string_view text, SnapshotFormat format) {
  std::istringstream in{std::string(text)};
  return parse_snapshot(in, format);
}

void write_snapshot_csv(std::ostream& out, std::span<const Quote> quotes) {
  out << "market,base,quote,ask\n";
  for (const auto& q : quotes)
    out << q.market << ',' << q.base << ',' << q.quote << ',' << format_double(q.ask) << '\n';
}

void validate_quotes(std::span<const Quote> quotes) {
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& q : quotes) {
    if (!(q.ask > 0.0) || !std::isfinite(q.ask))
      throw std::invalid_argument("quote ask must be positive and finite");
    if (q.base == q.quote) throw std::invalid_argument("quote base equals quote currency");
    if (!seen.emplace(q.market, q.base, q.quote).second)
      throw std::invalid_argument("duplicate quote " + q.market + "," + q.base + "," + q.quote);
  }
}

ExchangeGraph::ExchangeGraph(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].index != i) throw std::invalid_argument("node indices must be 0..n-1");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.from >= nodes_.size() || e.to >= nodes_.size())
      throw std::invalid_argument("edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("self loop");
    if (!(e.rate > 0.0) || !std::isfinite(e.rate))
      throw std::invalid_argument("edge rate must be positive and finite");
    if (!edge_index_.emplace(std::pair{e.from, e.to}, i).second)
      throw std::invalid_argument("parallel edge");
  }
}

std::optional<std::size_t> ExchangeGraph::find_edge(NodeIndex from, NodeIndex to) const {
  const auto it = edge_index_.find({from, to});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeIndex> ExchangeGraph::find_node(std::string_view market,
                                                  std::string_view currency) const {
  for (const auto& n : nodes_)
    if (n.market == market && n.currency == currency) return n.index;
  return std::nullopt;
}

ExchangeGraph build_graph(std::span<const Quote> quotes, const GraphOptions& options) {
  if (!(options.epsilon_lo > 0.0 && options.epsilon_lo <= options.epsilon_hi &&
        options.epsilon_hi < 1.0))
    throw std::invalid_argument("epsilon range must satisfy 0 < lo <= hi < 1");
  if (!(options.transfer_epsilon > 0.0 && options.transfer_epsilon < 1.0))
    throw std::invalid_argument("transfer epsilon must lie in (0, 1)");
  validate_quotes(quotes);

  std::vector<Node> nodes;
  std::map<std::pair<std::string, std::string>, NodeIndex> index;
  auto node_of = [&](const std::string& market, const std::string& currency) {
    auto [it, inserted] = index.emplace(std::pair{market, currency}, nodes.size());
    if (inserted) nodes.push_back(Node{nodes.size(), market, currency});
    return it->second;
  };

  std::set<std::tuple<std::string, std::string, std::string>> quoted;
  for (const auto& q : quotes) {
    node_of(q.market, q.base);
    node_of(q.market, q.quote);
    quoted.emplace(q.market, q.base, q.quote);
  }

  std::vector<Edge> edges;
  edges.reserve(quotes.size() * 2);
  detail::Rng rng(options.seed, /*stream=*/0x5eed5b8eadULL);
  for (const auto& q : quotes) {
    const NodeIndex from = index.at({q.market, q.base});
    const NodeIndex to = index.at({q.market, q.quote});
    if (quoted.count({q.market, q.quote, q.base})) {
      edges.push_back(Edge{from, to, q.ask, EdgeKind::quoted, std::nullopt});
      continue;
    }
    const double drawn = rng.uniform(options.epsilon_lo, options.epsilon_hi);
    const double reverse = drawn / q.ask;
    const double epsilon = q.ask * reverse;
    edges.push_back(Edge{from, to, q.ask, EdgeKind::quoted, epsilon});
    edges.push_back(Edge{to, from, reverse, EdgeKind::spread_reverse, epsilon});
  }

  // Transfer edges between every pair of markets listing the same currency.
  std::map<std::string, std::vector<NodeIndex>> by_currency;
  for (const auto& n : nodes) by_currency[n.currency].push_back(n.index);
  for (const auto& n : nodes) {
    for (const NodeIndex other : by_currency[n.currency]) {
      if (other == n.index) continue;
      edges.push_back(Edge{n.index, other, options.transfer_epsilon, EdgeKind::transfer,
                           std::nullopt});
    }
  }
  return ExchangeGraph(std::move(nodes), std::move(edges));
}

SnapshotStats snapshot_stats(const ExchangeGraph& graph) {
  SnapshotStats s;
  std::set<std::string> markets, currencies;
  for (const auto& n : graph.nodes()) {
    markets.insert(n.market);
    currencies.insert(n.currency);
  }
  s.n_markets = markets.size();
  s.n_currencies = currencies.size();
  s.n_nodes = graph.node_count();
  s.n_edges = graph.edge_count();
  if (!graph.edges().empty()) {
    s.min_rate = std::numeric_limits<double>::infinity();
    s.max_rate = 0.0;
    for (const auto& e : graph.edges()) {
      s.min_rate = std::min(s.min_rate, e.rate);
      s.max_rate = std::max(s.max_rate, e.rate);
    }
  }
  return s;
}

}  // namespace arbcycle
