#include <stdexcept>

#include "oracle_geometry.hpp"
#include "rootpoly/oracle.hpp"

namespace rootpoly::oracle {

FVector exhaustive_forest_census(const Graph& t) {
  const int n = t.vertex_count();
  if (static_cast<int>(t.edge_count()) != n - 1 || detail::has_cycle(n, t.edges()))
    throw std::invalid_argument("exhaustive_forest_census: need a spanning tree");
  const std::vector<Edge> pool = detail::increasing_reach(t);
  if (pool.size() > 24) throw std::length_error("exhaustive_forest_census: closure has more than 24 edges");
  const std::size_t m = pool.size();

  auto edges_of = [&](std::uint32_t mask) {
    std::vector<Edge> out;
    for (std::size_t x = 0; x < m; ++x)
      if (mask >> x & 1u) out.push_back(pool[x]);
    return out;
  };
  auto alternating = [](const std::vector<Edge>& edges) {
    for (Edge a : edges)
      for (Edge b : edges)
        if (a.j == b.i) return false;
    return true;
  };
  auto noncrossing = [](const std::vector<Edge>& edges) {
    for (Edge a : edges)
      for (Edge b : edges)
        if (detail::pair_crosses(a, b)) return false;
    return true;
  };

  // Maximal simplices: noncrossing alternating spanning trees of the closure.
  std::vector<std::uint32_t> tops;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<int>(__builtin_popcount(mask)) != n - 1) continue;
    const auto edges = edges_of(mask);
    if (!detail::has_cycle(n, edges) && alternating(edges) && noncrossing(edges)) tops.push_back(mask);
  }

  // Facets of P(t) through the origin, as value tables on the pool roots.
  std::vector<detail::IntVector> points{detail::IntVector(n, 0)};
  for (Edge e : pool) {
    detail::IntVector v(n, 0);
    v[e.i - 1] = 1;
    v[e.j - 1] = -1;
    points.push_back(v);
  }
  const detail::Hull hull(n, points);
  std::vector<std::uint32_t> on_facet;  // roots lying on each facet through 0
  for (const auto& f : hull.facets()) {
    if (f.offset != 0) continue;
    std::uint32_t mask = 0;
    for (std::size_t x = 0; x < m; ++x) {
      detail::IntVector c;
      hull.coordinates(points[x + 1], c);
      std::int64_t s = 0;
      for (int r = 0; r < hull.dimension(); ++r) s += f.normal[r] * c[r];
      if (s == 0) mask |= 1u << x;
    }
    on_facet.push_back(mask);
  }

  FVector census{std::vector<Integer>(n, Integer(0))};
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool in_top = tops.empty() && mask == 0;
    for (std::uint32_t top : tops)
      if ((mask & top) == mask) in_top = true;
    if (!in_top) continue;
    bool boundary = false;
    for (std::uint32_t facet : on_facet)
      if ((mask & facet) == mask) boundary = true;
    if (!boundary) census.counts[__builtin_popcount(mask)] += 1;
  }
  return census;
}

}  // namespace rootpoly::oracle
