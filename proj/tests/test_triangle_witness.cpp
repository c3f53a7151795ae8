#include <doctest.h>

#include <random>

#include "arbcycle/apsp.hpp"
#include "arbcycle/triangle.hpp"
#include "arbcycle/witness.hpp"
#include "oracles.hpp"

using namespace arbcycle;

namespace {

const std::vector<WeightedEdge> kThreeCycle{{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};

std::optional<TriangleResult> triangle_of(std::size_t n, const std::vector<WeightedEdge>& edges,
                                          bool two_cycles) {
  const auto d = apsp_by_squaring(DistanceMatrix::adjacency(n, edges));
  return min_triangle(build_tripartite(n, edges, d, two_cycles));
}

bool identity_holds(const DistanceMatrix& d, const WitnessMatrix& w) {
  const auto c = oracle::min_plus(d, d);
  for (NodeIndex u = 0; u < d.size(); ++u)
    for (NodeIndex v = 0; v < d.size(); ++v) {
      if (!is_finite(c(u, v))) {
        if (w.has(u, v)) return false;
        continue;
      }
      const auto k = w(u, v);
      if (!k || oracle::add(d(u, *k), d(*k, v)) != c(u, v)) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("triangle") {

TEST_CASE("tripartite construction counts") {
  const auto d = apsp_by_squaring(DistanceMatrix::adjacency(3, kThreeCycle));
  const auto g = build_tripartite(3, kThreeCycle, d, false);
  CHECK(g.vertex_count() == 9);
  CHECK(g.e23.size() == 3);
  CHECK(g.e12.size() == 6);
  CHECK(g.e31.size() == 6);
  CHECK(build_tripartite(3, kThreeCycle, d, true).e12.size() == 9);

  const auto empty = build_tripartite(4, {}, apsp_by_squaring(DistanceMatrix::adjacency(4, {})), false);
  CHECK(empty.vertex_count() == 12);
  CHECK(empty.e12.empty());
  CHECK(empty.e23.empty());
  CHECK(empty.e31.empty());
  CHECK_FALSE(min_triangle(empty));
}

TEST_CASE("minimum triangle on small graphs") {
  const auto t = triangle_of(3, kThreeCycle, false);
  REQUIRE(t);
  CHECK(t->total == 6);
  CHECK(*t == TriangleResult{0, 1, 2, 6});

  const std::vector<WeightedEdge> pair{{0, 1, 5}, {1, 0, 7}};
  CHECK_FALSE(triangle_of(2, pair, false));
  REQUIRE(triangle_of(2, pair, true));
  CHECK(triangle_of(2, pair, true)->total == 12);
}

TEST_CASE("triangle total equals the lightest cycle on random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto edges = oracle::random_digraph(n, 0.4, 1, 20, rng);
    const auto adj = DistanceMatrix::adjacency(n, edges, kInf);
    const Weight two = oracle::min_simple_cycle(adj, 2);
    const Weight third = oracle::min_walk_through_third(n, edges);
    CHECK(triangle_of(n, edges, true).value_or(TriangleResult{0, 0, 0, kInf}).total == two);
    CHECK(triangle_of(n, edges, false).value_or(TriangleResult{0, 0, 0, kInf}).total == third);
  }
}

}  // TEST_SUITE

TEST_SUITE("witness") {

TEST_CASE("one-node matrix has itself as witness") {
  const DistanceMatrix d(1, 0);
  const std::vector<NodeIndex> all{0};
  const auto r = unique_witnesses(d, all);
  CHECK(*r.candidates(0, 0) == 0);
  CHECK(r.is_verified(0, 0));
  CHECK(*witness_matrix(d, {})(0, 0) == 0);
}

TEST_CASE("unique witness on the 3-cycle") {
  const auto a = DistanceMatrix::adjacency(3, kThreeCycle);
  const std::vector<NodeIndex> all{0, 1, 2};
  const auto r = unique_witnesses(a, all);
  CHECK(*r.candidates(0, 2) == 1);
  CHECK(r.is_verified(0, 2));
  CHECK(r.product == oracle::min_plus(a, a));
}

TEST_CASE("tied witnesses are flagged") {
  // Nodes 0 and 1 (ids 0b01, 0b10) both witness (2, 2); the assembled id 0b11
  // names node 2, which is outside the column set.
  DistanceMatrix d(3, kInf);
  d(2, 0) = 1;
  d(0, 2) = 1;
  d(2, 1) = 1;
  d(1, 2) = 1;
  const std::vector<NodeIndex> cols{0, 1};
  const auto r = unique_witnesses(d, cols);
  CHECK(r.product(2, 2) == 2);
  CHECK(*r.candidates(2, 2) == 2);
  CHECK_FALSE(r.is_verified(2, 2));
}

TEST_CASE("argument checks") {
  const DistanceMatrix d(3, 0);
  CHECK_THROWS_AS(unique_witnesses(d, {}), std::invalid_argument);
  const std::vector<NodeIndex> out_of_range{5};
  CHECK_THROWS_AS(unique_witnesses(d, out_of_range), std::out_of_range);
  SamplerConfig bad;
  bad.witness_constant = 0.5;
  CHECK_THROWS_AS(compute_witnesses(d, bad), std::invalid_argument);
  bad = {};
  bad.subset_ratio = 1.0;
  CHECK_THROWS_AS(compute_witnesses(d, bad), std::invalid_argument);
}

TEST_CASE("witness matrix of the 3-cycle adjacency") {
  const auto a = DistanceMatrix::adjacency(3, kThreeCycle);
  const auto w = witness_matrix(a, {});
  CHECK(*w(0, 2) == 1);
  CHECK(*w(1, 0) == 2);
  CHECK(*w(2, 1) == 0);
  CHECK(identity_holds(a, w));
}

TEST_CASE("identity matrix only has trivial witnesses") {
  const auto d = DistanceMatrix(6).with_diagonal(0);
  const auto w = witness_matrix(d, {});
  for (NodeIndex u = 0; u < 6; ++u)
    for (NodeIndex v = 0; v < 6; ++v) {
      if (u == v) CHECK(*w(u, v) == u);
      else CHECK_FALSE(w.has(u, v));
    }
}

TEST_CASE("sampling resolves most entries and the identity always holds") {
  std::mt19937_64 rng(31);
  std::size_t sampled = 0, total = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 32;
    const auto d = oracle::random_matrix(n, 0.6, 25, rng);
    SamplerConfig config;
    config.seed = std::uint64_t(trial);
    const auto r = compute_witnesses(d, config);
    CHECK(identity_holds(d, r.witnesses));
    CHECK(r.from_sampling + r.from_fallback == r.finite_entries);
    sampled += r.from_sampling;
    total += r.finite_entries;
    CHECK(compute_witnesses(d, config).witnesses == r.witnesses);
  }
  CHECK(double(sampled) >= 0.9 * double(total));
}

TEST_CASE("path witnesses are interior nodes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const auto edges = oracle::random_digraph(n, 0.35, 1, 15, rng);
    const auto d = apsp_by_squaring(DistanceMatrix::adjacency(n, edges));
    const auto w = path_witnesses(d, {});
    // Witnesses of the product with the diagonal removed: paths with at
    // least one interior node.
    const auto interior = oracle::min_plus(d.with_diagonal(kInf), d.with_diagonal(kInf));
    for (NodeIndex u = 0; u < n; ++u)
      for (NodeIndex v = 0; v < n; ++v) {
        CHECK(w.has(u, v) == is_finite(interior(u, v)));
        if (const auto k = w(u, v)) {
          CHECK(*k != u);
          CHECK(*k != v);
          CHECK(d(u, *k) + d(*k, v) == interior(u, v));
        }
      }
  }
}

TEST_CASE("reconstruction of the 3-cycle") {
  const auto d = apsp_by_squaring(DistanceMatrix::adjacency(3, kThreeCycle));
  const auto w = path_witnesses(d, {});
  const auto adj = DistanceMatrix::adjacency(3, kThreeCycle, kInf);
  const TriangleResult tri{2, 0, 1, 6};
  CHECK(reconstruct_cycle(tri, d, w, adj) == std::vector<NodeIndex>{0, 1, 2});
  const TriangleResult wrong{2, 0, 1, 7};
  CHECK_THROWS_AS(reconstruct_cycle(wrong, d, w, adj), std::logic_error);
  const TriangleResult not_edge{2, 1, 0, 8};
  CHECK_THROWS_AS(reconstruct_cycle(not_edge, d, w, adj), std::logic_error);
}

TEST_CASE("reconstructed walks carry the triangle total") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const auto edges = oracle::random_digraph(n, 0.4, 1, 20, rng);
    const auto d = apsp_by_squaring(DistanceMatrix::adjacency(n, edges));
    const auto adj = DistanceMatrix::adjacency(n, edges, kInf);
    const auto w = path_witnesses(d, {});
    for (const bool two : {true, false}) {
      const auto t = min_triangle(build_tripartite(n, edges, d, two));
      if (!t) continue;
      const auto nodes = reconstruct_cycle(*t, d, w, adj);
      CHECK(cycle_weight(nodes, adj) == t->total);
      CHECK(nodes == normalize_cycle(nodes));
      if (two) {
        CHECK(is_simple_cycle(nodes));
        CHECK(t->total == oracle::min_simple_cycle(adj, 2));
      }
    }
  }
}

}  // TEST_SUITE
