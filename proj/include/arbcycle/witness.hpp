#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arbcycle/distance_matrix.hpp"
#include "arbcycle/transform.hpp"
#include "arbcycle/triangle.hpp"

namespace arbcycle {

/// Bit-sliced witness candidates for the product restricted to `columns`.
struct UniqueWitnessResult {
  WitnessMatrix candidates;  // assembled index, empty when no bit was set
  DistanceMatrix product;    // D[*, columns] * D[columns, *]
  // 1 where the candidate is a column index satisfying
  // product[u][v] == D[u][k] + D[k][v]. Guaranteed when the witness inside
  // `columns` is unique; entries with several witnesses may fail.
  std::vector<std::uint8_t> verified;

  bool is_verified(NodeIndex u, NodeIndex v) const { return verified[u * product.size() + v] != 0; }
};

/// For each bit l of (k + 1), k a column index, computes the product over the
/// columns whose bit l is set; where it matches the full restricted product,
/// bit l goes into the candidate of (u, v). Indices are assembled 1-based and
/// shifted back, so node 0 is distinguishable from "no witness".
UniqueWitnessResult unique_witnesses(const DistanceMatrix& distances,
                                     std::span<const NodeIndex> columns);

struct SamplerConfig {
  double witness_constant = 2.0;  // s = ceil(witness_constant * log2 n) subsets per round
  double subset_ratio = 2.0;      // round r samples ceil(m / subset_ratio^r) columns
  std::uint64_t seed = 0;

  /// ceil(log2 m), at least 1.
  std::size_t rounds(std::size_t m) const;
  std::size_t subsets_per_round(std::size_t n) const;
};

struct WitnessComputation {
  WitnessMatrix witnesses;
  std::size_t finite_entries = 0;
  std::size_t from_sampling = 0;  // resolved by the randomized rounds
  std::size_t from_fallback = 0;  // resolved by the final linear scan
};

/// Witnesses for C = D * D. Randomized rounds of unique-witness sampling
/// resolve most entries; a smallest-index linear scan completes the rest, so
/// every finite C[u][v] gets k with C[u][v] == D[u][k] + D[k][v]. Deterministic
/// for a fixed seed.
WitnessComputation compute_witnesses(const DistanceMatrix& distances, const SamplerConfig& config);
WitnessMatrix witness_matrix(const DistanceMatrix& distances, const SamplerConfig& config);

/// Witnesses suited to path expansion: computed on `distances` with an
/// infinite diagonal, so a recorded witness of (u, v) is always an interior
/// node k != u, v.
WitnessMatrix path_witnesses(const DistanceMatrix& distances, const SamplerConfig& config);

/// Expands the triangle's two shortest-path legs into the closed walk
/// anchor ~> tail -> head ~> anchor. A leg (a, b) is a direct edge when
/// D[a][b] equals w(a, b); otherwise it is split at W[a][b]. The result starts
/// at its smallest node and its edge-weight sum equals triangle.total; any
/// inconsistency throws std::logic_error.
std::vector<NodeIndex> reconstruct_cycle(const TriangleResult& triangle,
                                         const DistanceMatrix& distances,
                                         const WitnessMatrix& witnesses,
                                         const DistanceMatrix& edge_weights);
std::vector<NodeIndex> reconstruct_cycle(const TriangleResult& triangle,
                                         const DistanceMatrix& distances,
                                         const WitnessMatrix& witnesses,
                                         const TransformedGraph& graph);

}  // namespace arbcycle
