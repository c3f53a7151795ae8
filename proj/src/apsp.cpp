#include "arbcycle/apsp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

#include "arbcycle/detail/parallel.hpp"

namespace arbcycle {
namespace {

void require_same_size(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distance product: dimension mismatch");
}

constexpr NodeIndex kNoPred = std::numeric_limits<NodeIndex>::max();

// Floyd-Warshall on the adjacency with an infinite diagonal. pred(u, v) is the
// node before v on the recorded u -> v path.
class FloydWarshall {
 public:
  explicit FloydWarshall(const DistanceMatrix& adjacency)
      : n_(adjacency.size()), dist_(adjacency.with_diagonal(kInf)), pred_(n_ * n_, kNoPred) {
    for (NodeIndex u = 0; u < n_; ++u)
      for (NodeIndex v = 0; v < n_; ++v)
        if (is_finite(dist_(u, v))) pred_[u * n_ + v] = u;
    for (NodeIndex k = 0; k < n_; ++k) {
      const auto row_k = dist_.row(k);
      for (NodeIndex i = 0; i < n_; ++i) {
        const Weight dik = dist_(i, k);
        if (!is_finite(dik)) continue;
        auto row_i = dist_.row(i);
        for (NodeIndex j = 0; j < n_; ++j) {
          const Weight dkj = row_k[j];
          if (!is_finite(dkj)) continue;
          const Weight s = dik + dkj;
          if (s < row_i[j]) {
            row_i[j] = s;
            pred_[i * n_ + j] = pred_[k * n_ + j];
          }
        }
      }
    }
  }

  const DistanceMatrix& dist() const { return dist_; }
  NodeIndex pred(NodeIndex u, NodeIndex v) const { return pred_[u * n_ + v]; }

  // Nodes of the recorded path u -> ... -> v for u != v, both ends included.
  std::vector<NodeIndex> path(NodeIndex u, NodeIndex v) const {
    std::vector<NodeIndex> out{v};
    NodeIndex cur = v;
    while (cur != u) {
      cur = pred(u, cur);
      if (cur == kNoPred || out.size() > n_)
        throw std::logic_error("floyd-warshall: broken predecessor chain");
      out.push_back(cur);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t n_;
  DistanceMatrix dist_;
  std::vector<NodeIndex> pred_;
};

// Keeps the lightest walk; ties go to the lexicographically smallest
// normalized node sequence.
class BestWalk {
 public:
  template <class Build>
  void offer(Weight weight, Build&& build) {
    if (weight > best_weight_) return;
    auto nodes = normalize_cycle(build());
    if (weight < best_weight_ || nodes < best_nodes_) {
      best_weight_ = weight;
      best_nodes_ = std::move(nodes);
    }
  }

  std::optional<CycleReport> take() {
    if (!is_finite(best_weight_)) return std::nullopt;
    CycleReport r;
    r.nodes = std::move(best_nodes_);
    r.sum_weight = best_weight_;
    return r;
  }

 private:
  Weight best_weight_ = kInf;
  std::vector<NodeIndex> best_nodes_;
};

}  // namespace

ProductResult min_plus_product(const DistanceMatrix& a, const DistanceMatrix& b,
                               bool capture_witnesses) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  ProductResult out{DistanceMatrix(n, kInf), std::nullopt};
  if (capture_witnesses) out.witnesses.emplace(n);
  auto& c = out.product;
  auto* w = out.witnesses ? &*out.witnesses : nullptr;

  detail::parallel_rows(n, [&](NodeIndex u) {
    auto c_row = c.row(u);
    const auto a_row = a.row(u);
    for (NodeIndex k = 0; k < n; ++k) {
      const Weight auk = a_row[k];
      if (!is_finite(auk)) continue;
      const auto b_row = b.row(k);
      for (NodeIndex v = 0; v < n; ++v) {
        const Weight bkv = b_row[v];
        if (!is_finite(bkv)) continue;
        const Weight s = auk + bkv;
        if (s < c_row[v]) {
          c_row[v] = s;
          if (w) w->set(u, v, k);
        }
      }
    }
  });
  return out;
}

DistanceMatrix min_plus_product_over(const DistanceMatrix& a, const DistanceMatrix& b,
                                     std::span<const NodeIndex> inner) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  for (const auto k : inner)
    if (k >= n) throw std::out_of_range("distance product: inner index out of range");
  DistanceMatrix c(n, kInf);
  detail::parallel_rows(n, [&](NodeIndex u) {
    auto c_row = c.row(u);
    const auto a_row = a.row(u);
    for (const NodeIndex k : inner) {
      const Weight auk = a_row[k];
      if (!is_finite(auk)) continue;
      const auto b_row = b.row(k);
      for (NodeIndex v = 0; v < n; ++v) {
        const Weight bkv = b_row[v];
        if (!is_finite(bkv)) continue;
        const Weight s = auk + bkv;
        if (s < c_row[v]) c_row[v] = s;
      }
    }
  });
  return c;
}

DistanceMatrix apsp_by_squaring(const DistanceMatrix& adjacency) {
  const std::size_t n = adjacency.size();
  for (NodeIndex u = 0; u < n; ++u)
    if (adjacency(u, u) != 0) throw std::invalid_argument("apsp: adjacency diagonal must be 0");
  DistanceMatrix d = adjacency;
  const int squarings = n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));  // ceil(log2 n)
  for (int i = 0; i < squarings; ++i) {
    auto next = min_plus_product(d, d).product;
    if (next == d) break;
    d = std::move(next);
  }
  return d;
}

DistanceMatrix floyd_warshall_distances(const DistanceMatrix& adjacency) {
  DistanceMatrix d = adjacency;
  const std::size_t n = d.size();
  for (NodeIndex u = 0; u < n; ++u) d(u, u) = std::min<Weight>(d(u, u), 0);
  for (NodeIndex k = 0; k < n; ++k)
    for (NodeIndex i = 0; i < n; ++i) {
      const Weight dik = d(i, k);
      if (!is_finite(dik)) continue;
      for (NodeIndex j = 0; j < n; ++j) {
        const Weight s = sat_add(dik, d(k, j));
        if (s < d(i, j)) d(i, j) = s;
      }
    }
  return d;
}

std::optional<CycleReport> floyd_warshall_min_cycle(const DistanceMatrix& adjacency,
                                                    MinLength min_length) {
  const std::size_t n = adjacency.size();
  const FloydWarshall fw(adjacency);
  const auto& d = fw.dist();
  BestWalk best;

  if (min_length == MinLength::two) {
    Weight girth = kInf;
    NodeIndex start = 0;
    for (NodeIndex u = 0; u < n; ++u)
      if (d(u, u) < girth) {
        girth = d(u, u);
        start = u;
      }
    if (!is_finite(girth)) return std::nullopt;
    // Close the cycle through each predecessor x of `start` that realises it.
    for (NodeIndex x = 0; x < n; ++x) {
      if (x == start || !is_finite(adjacency(x, start)) || !is_finite(d(start, x))) continue;
      if (d(start, x) + adjacency(x, start) != girth) continue;
      best.offer(girth, [&] { return fw.path(start, x); });
    }
    return best.take();
  }

  // Pairs u -> k -> u whose two legs are not both single edges.
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex k = 0; k < n; ++k) {
      if (k == u || !is_finite(d(u, k)) || !is_finite(d(k, u))) continue;
      if (fw.pred(u, k) == u && fw.pred(k, u) == k) continue;
      best.offer(d(u, k) + d(k, u), [&] {
        auto walk = fw.path(u, k);
        const auto back = fw.path(k, u);
        walk.insert(walk.end(), back.begin() + 1, back.end() - 1);
        return walk;
      });
    }
  // Triangles whose every pair is linked by single-edge shortest paths are
  // invisible to the sweep above.
  for (NodeIndex a = 0; a < n; ++a)
    for (NodeIndex b = 0; b < n; ++b) {
      if (b == a || !is_finite(adjacency(a, b))) continue;
      for (NodeIndex c = 0; c < n; ++c) {
        if (c == a || c == b || !is_finite(adjacency(b, c)) || !is_finite(adjacency(c, a)))
          continue;
        best.offer(adjacency(a, b) + adjacency(b, c) + adjacency(c, a),
                   [&] { return std::vector<NodeIndex>{a, b, c}; });
      }
    }
  return best.take();
}

std::optional<Weight> karp_min_cycle_weight(const DistanceMatrix& distances,
                                            std::span<const WeightedEdge> edges,
                                            MinLength min_length) {
  const std::size_t n = distances.size();
  std::vector<std::vector<WeightedEdge>> out(n);
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) throw std::out_of_range("karp: edge endpoint out of range");
    out[e.from].push_back(e);
  }
  Weight best = kInf;
  for (const auto& e : edges) {
    if (min_length == MinLength::two) {
      best = std::min(best, sat_add(e.weight, distances(e.to, e.from)));
      continue;
    }
    for (const auto& next : out[e.to]) {
      if (next.to == e.from) continue;
      best = std::min(best, sat_add(sat_add(e.weight, next.weight), distances(next.to, e.from)));
    }
  }
  if (!is_finite(best)) return std::nullopt;
  return best;
}

}  // namespace arbcycle
