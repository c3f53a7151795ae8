#include "arbcycle/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "arbcycle/apsp.hpp"
#include "arbcycle/cycle.hpp"
#include "arbcycle/detail/random.hpp"

namespace arbcycle {
namespace {

bool is_witness(const DistanceMatrix& d, NodeIndex u, NodeIndex k, NodeIndex v, Weight target) {
  return is_finite(target) && sat_add(d(u, k), d(k, v)) == target;
}

class LegExpander {
 public:
  LegExpander(const DistanceMatrix& d, const WitnessMatrix& w, const DistanceMatrix& edges,
              std::vector<NodeIndex>& out)
      : d_(d), w_(w), edges_(edges), out_(out) {}

  // Appends the nodes of the shortest a ~> b path, b excluded.
  void expand(NodeIndex a, NodeIndex b, std::size_t depth = 0) {
    if (a == b) return;
    if (depth > d_.size()) throw std::logic_error("witness expansion exceeded n levels");
    const Weight target = d_(a, b);
    if (!is_finite(target)) throw std::logic_error("leg has no path");
    if (is_finite(edges_(a, b)) && edges_(a, b) == target) {
      out_.push_back(a);
      return;
    }
    const auto k = w_(a, b);
    if (!k || *k == a || *k == b || !is_witness(d_, a, *k, b, target))
      throw std::logic_error("inconsistent witness for leg " + std::to_string(a) + " -> " +
                             std::to_string(b));
    expand(a, *k, depth + 1);
    expand(*k, b, depth + 1);
  }

 private:
  const DistanceMatrix& d_;
  const WitnessMatrix& w_;
  const DistanceMatrix& edges_;
  std::vector<NodeIndex>& out_;
};

}  // namespace

UniqueWitnessResult unique_witnesses(const DistanceMatrix& distances,
                                     std::span<const NodeIndex> columns) {
  const std::size_t n = distances.size();
  if (columns.empty()) throw std::invalid_argument("unique witnesses: empty column set");
  std::vector<NodeIndex> cols(columns.begin(), columns.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.back() >= n) throw std::out_of_range("unique witnesses: column out of range");
  std::vector<bool> in_cols(n, false);
  for (auto k : cols) in_cols[k] = true;

  UniqueWitnessResult out{WitnessMatrix(n), min_plus_product_over(distances, distances, cols),
                          std::vector<std::uint8_t>(n * n, 0)};
  const auto& product = out.product;

  std::vector<std::uint64_t> bits(n * n, 0);
  const int width = std::bit_width(n);  // enough bits for the 1-based ids 1..n
  std::vector<NodeIndex> slice;
  for (int l = 0; l < width; ++l) {
    slice.clear();
    for (auto k : cols)
      if (((k + 1) >> l) & 1U) slice.push_back(k);
    if (slice.empty()) continue;
    const auto partial = min_plus_product_over(distances, distances, slice);
    for (NodeIndex u = 0; u < n; ++u)
      for (NodeIndex v = 0; v < n; ++v)
        if (is_finite(product(u, v)) && partial(u, v) == product(u, v))
          bits[u * n + v] |= std::uint64_t{1} << l;
  }

  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v) {
      const auto id = bits[u * n + v];
      if (id == 0 || id > n) continue;
      const NodeIndex k = id - 1;
      out.candidates.set(u, v, k);
      if (in_cols[k] && is_witness(distances, u, k, v, product(u, v))) out.verified[u * n + v] = 1;
    }
  return out;
}

std::size_t SamplerConfig::rounds(std::size_t m) const {
  return m <= 2 ? 1 : static_cast<std::size_t>(std::bit_width(m - 1));
}

std::size_t SamplerConfig::subsets_per_round(std::size_t n) const {
  const double s = std::ceil(witness_constant * std::log2(double(std::max<std::size_t>(n, 2))));
  return std::max<std::size_t>(1, static_cast<std::size_t>(s));
}

WitnessComputation compute_witnesses(const DistanceMatrix& distances, const SamplerConfig& config) {
  if (!(config.witness_constant >= 1.0))
    throw std::invalid_argument("witness constant must be >= 1");
  if (!(config.subset_ratio > 1.0)) throw std::invalid_argument("subset ratio must exceed 1");
  const std::size_t n = distances.size();
  const auto target = min_plus_product(distances, distances).product;

  WitnessComputation out{WitnessMatrix(n)};
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v)
      if (is_finite(target(u, v))) ++out.finite_entries;
  if (n == 0) return out;

  detail::Rng rng(config.seed, /*stream=*/0x3171e55ULL);
  const std::size_t per_round = config.subsets_per_round(n);
  double size = double(n);
  for (std::size_t r = 1; r <= config.rounds(n); ++r) {
    size /= config.subset_ratio;
    const auto subset_size = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(size)));
    for (std::size_t t = 0; t < per_round; ++t) {
      if (out.from_sampling == out.finite_entries) break;
      const auto subset = detail::sample_indices(n, subset_size, rng);
      const auto sampled = unique_witnesses(distances, subset);
      for (NodeIndex u = 0; u < n; ++u)
        for (NodeIndex v = 0; v < n; ++v) {
          if (!is_finite(target(u, v)) || out.witnesses.has(u, v)) continue;
          const auto k = sampled.candidates(u, v);
          if (k && is_witness(distances, u, *k, v, target(u, v))) {
            out.witnesses.set(u, v, *k);
            ++out.from_sampling;
          }
        }
    }
  }

  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v) {
      if (!is_finite(target(u, v)) || out.witnesses.has(u, v)) continue;
      for (NodeIndex k = 0; k < n; ++k)
        if (is_witness(distances, u, k, v, target(u, v))) {
          out.witnesses.set(u, v, k);
          ++out.from_fallback;
          break;
        }
    }
  return out;
}

WitnessMatrix witness_matrix(const DistanceMatrix& distances, const SamplerConfig& config) {
  return compute_witnesses(distances, config).witnesses;
}

WitnessMatrix path_witnesses(const DistanceMatrix& distances, const SamplerConfig& config) {
  return witness_matrix(distances.with_diagonal(kInf), config);
}

std::vector<NodeIndex> reconstruct_cycle(const TriangleResult& triangle,
                                         const DistanceMatrix& distances,
                                         const WitnessMatrix& witnesses,
                                         const DistanceMatrix& edge_weights) {
  const std::size_t n = distances.size();
  if (witnesses.size() != n || edge_weights.size() != n)
    throw std::invalid_argument("reconstruct: dimension mismatch");
  if (triangle.anchor >= n || triangle.tail >= n || triangle.head >= n)
    throw std::out_of_range("reconstruct: triangle node out of range");
  if (!is_finite(edge_weights(triangle.tail, triangle.head)) || triangle.tail == triangle.head)
    throw std::logic_error("reconstruct: critical edge is not an edge");

  std::vector<NodeIndex> walk;
  LegExpander legs(distances, witnesses, edge_weights, walk);
  legs.expand(triangle.anchor, triangle.tail);
  walk.push_back(triangle.tail);
  legs.expand(triangle.head, triangle.anchor);

  if (walk.size() < 2) throw std::logic_error("reconstruct: degenerate walk");
  if (cycle_weight(walk, edge_weights) != triangle.total)
    throw std::logic_error("reconstruct: walk weight differs from triangle total");
  return normalize_cycle(walk);
}

std::vector<NodeIndex> reconstruct_cycle(const TriangleResult& triangle,
                                         const DistanceMatrix& distances,
                                         const WitnessMatrix& witnesses,
                                         const TransformedGraph& graph) {
  return reconstruct_cycle(triangle, distances, witnesses, graph.adjacency(kInf));
}

}  // namespace arbcycle
