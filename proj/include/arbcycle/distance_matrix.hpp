#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace arbcycle {

using NodeIndex = std::size_t;
using Weight = std::int64_t;

// Distance sentinel. Three terms bounded by the sentinel still fit in Weight,
// so triangle sums D + w + D never overflow.
inline constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

constexpr bool is_finite(Weight w) noexcept { return w < kInf; }

// Saturating addition: anything touching the sentinel stays at the sentinel.
constexpr Weight sat_add(Weight a, Weight b) noexcept {
  if (a >= kInf || b >= kInf) return kInf;
  const Weight s = a + b;
  return s < kInf ? s : kInf;
}

struct WeightedEdge {
  NodeIndex from = 0;
  NodeIndex to = 0;
  Weight weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Dense row-major n x n matrix of nonnegative integer distances with
/// kInf meaning "no path".
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, Weight fill = kInf);

  /// Adjacency matrix of a simple digraph. Off-edge entries are kInf; the
  /// diagonal gets `diagonal` (0 for shortest paths, kInf for cycle search).
  /// Parallel edges keep the lighter weight.
  static DistanceMatrix adjacency(std::size_t n, std::span<const WeightedEdge> edges,
                                  Weight diagonal = 0);

  std::size_t size() const noexcept { return n_; }

  Weight operator()(NodeIndex u, NodeIndex v) const noexcept { return data_[u * n_ + v]; }
  Weight& operator()(NodeIndex u, NodeIndex v) noexcept { return data_[u * n_ + v]; }

  /// Bounds-checked read.
  Weight at(NodeIndex u, NodeIndex v) const;
  /// Bounds-checked write; rejects negatives and clamps to the sentinel.
  void set(NodeIndex u, NodeIndex v, Weight w);

  std::span<const Weight> row(NodeIndex u) const noexcept {
    return {data_.data() + u * n_, n_};
  }
  std::span<Weight> row(NodeIndex u) noexcept { return {data_.data() + u * n_, n_}; }

  DistanceMatrix with_diagonal(Weight w) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> data_;
};

/// Text fixture format: first line n, then n lines of n entries, `inf` for
/// the sentinel.
DistanceMatrix read_distance_matrix(std::istream& in);
void write_distance_matrix(std::ostream& out, const DistanceMatrix& m);

/// n x n matrix of intermediate node indices for a distance product; empty
/// entries mean "no witness recorded".
class WitnessMatrix {
 public:
  WitnessMatrix() = default;
  explicit WitnessMatrix(std::size_t n) : n_(n), data_(n * n, kNone) {}

  std::size_t size() const noexcept { return n_; }

  std::optional<NodeIndex> operator()(NodeIndex u, NodeIndex v) const noexcept {
    const auto k = data_[u * n_ + v];
    if (k == kNone) return std::nullopt;
    return static_cast<NodeIndex>(k);
  }
  bool has(NodeIndex u, NodeIndex v) const noexcept { return data_[u * n_ + v] != kNone; }

  void set(NodeIndex u, NodeIndex v, NodeIndex k) noexcept {
    data_[u * n_ + v] = static_cast<std::int32_t>(k);
  }
  void clear(NodeIndex u, NodeIndex v) noexcept { data_[u * n_ + v] = kNone; }

  friend bool operator==(const WitnessMatrix&, const WitnessMatrix&) = default;

 private:
  static constexpr std::int32_t kNone = -1;
  std::size_t n_ = 0;
  std::vector<std::int32_t> data_;
};

}  // namespace arbcycle
