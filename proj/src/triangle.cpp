#include "arbcycle/triangle.hpp"

#include <algorithm>
#include <stdexcept>

#include "arbcycle/detail/parallel.hpp"

namespace arbcycle {
namespace {

DistanceMatrix dense_part(std::size_t n, const std::vector<WeightedEdge>& edges) {
  DistanceMatrix m(n, kInf);
  for (const auto& e : edges) m(e.from, e.to) = e.weight;
  return m;
}

}  // namespace

TripartiteGraph build_tripartite(std::size_t n, std::span<const WeightedEdge> edges,
                                 const DistanceMatrix& distances, bool include_two_cycles) {
  if (distances.size() != n) throw std::invalid_argument("tripartite: dimension mismatch");
  TripartiteGraph g;
  g.n = n;
  g.include_two_cycles = include_two_cycles;
  g.e23.assign(edges.begin(), edges.end());
  for (const auto& e : g.e23)
    if (e.from >= n || e.to >= n) throw std::out_of_range("tripartite: edge endpoint");
  std::sort(g.e23.begin(), g.e23.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v) {
      if (!is_finite(distances(u, v)) || (u == v && !include_two_cycles)) continue;
      g.e12.push_back({u, v, distances(u, v)});
      g.e31.push_back({u, v, distances(u, v)});
    }
  return g;
}

TripartiteGraph build_tripartite(const TransformedGraph& graph, const DistanceMatrix& distances,
                                 bool include_two_cycles) {
  return build_tripartite(graph.node_count(), graph.edges(), distances, include_two_cycles);
}

std::optional<TriangleResult> min_triangle(const TripartiteGraph& graph) {
  const std::size_t n = graph.n;
  const auto first_leg = dense_part(n, graph.e12);  // anchor1 -> tail2
  const auto last_leg = dense_part(n, graph.e31);   // head3 -> anchor1

  // Best triangle per anchor, then reduced in anchor order so ties resolve
  // identically however the anchors are split across workers.
  std::vector<std::optional<TriangleResult>> per_anchor(n);
  detail::parallel_rows(n, [&](NodeIndex anchor) {
    std::optional<TriangleResult> best;
    for (const auto& e : graph.e23) {
      const Weight out = first_leg(anchor, e.from);
      const Weight back = last_leg(e.to, anchor);
      if (!is_finite(out) || !is_finite(back)) continue;
      const Weight total = out + e.weight + back;
      if (!best || total < best->total) best = TriangleResult{anchor, e.from, e.to, total};
    }
    per_anchor[anchor] = best;
  }, 16);

  std::optional<TriangleResult> best;
  for (const auto& r : per_anchor)
    if (r && (!best || r->total < best->total)) best = r;
  return best;
}

}  // namespace arbcycle
