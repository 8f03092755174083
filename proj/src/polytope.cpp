#include "rootpoly/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootpoly/intersection.hpp"

namespace rootpoly {

namespace {

// A component of a forest renumbered to 1..m and uncrossed.
struct ComponentFrame {
  CompactGraph compacted;
  Uncrossing uncrossed;
  int vertex_count;  // of the original forest

  const Graph& tree() const { return uncrossed.graph; }

  Graph to_original(const Graph& h) const {
    const Graph local = uncrossed.pull_back(h);
    std::vector<Edge> edges;
    for (auto [i, j] : local.edges()) edges.push_back({compacted.vertices[i - 1], compacted.vertices[j - 1]});
    return Graph(vertex_count, std::move(edges));
  }
};

std::vector<ComponentFrame> frames_of(const Graph& forest) {
  if (!is_forest(forest)) throw std::invalid_argument("root polytope input must be acyclic");
  std::vector<ComponentFrame> out;
  for (const Graph& component : edge_components(forest)) {
    CompactGraph c = compact(component);
    Uncrossing u = uncross(c.graph);
    out.push_back({std::move(c), std::move(u), forest.vertex_count()});
  }
  return out;
}

// Every choice of one graph per list, merged.
std::vector<Graph> join(int vertex_count, const std::vector<std::vector<Graph>>& lists) {
  std::vector<Graph> out{Graph(vertex_count)};
  for (const auto& list : lists) {
    std::vector<Graph> next;
    for (const Graph& base : out)
      for (const Graph& part : list) {
        std::vector<Edge> edges = base.edges();
        edges.insert(edges.end(), part.edges().begin(), part.edges().end());
        next.emplace_back(vertex_count, std::move(edges));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Noncrossing alternating spanning trees of the closure of a tree.
std::vector<Graph> spanning_simplices(const Graph& tree) {
  const int m = tree.vertex_count();
  const std::vector<Edge> pool = transitive_closure(tree).edges();
  std::vector<Graph> out;
  std::vector<Edge> chosen;
  auto search = [&](auto&& self, std::size_t next) -> void {
    if (static_cast<int>(chosen.size()) == m - 1) {
      Graph g(m, chosen);
      if (is_alternating(g) && is_forest(g)) out.push_back(std::move(g));
      return;
    }
    for (std::size_t x = next; x < pool.size(); ++x) {
      const Edge e = pool[x];
      if (std::any_of(chosen.begin(), chosen.end(), [&](Edge c) { return crosses(c, e) || c.j == e.i || e.j == c.i; }))
        continue;
      chosen.push_back(e);
      if (is_forest(Graph(m, chosen))) self(self, x + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return out;
}

std::vector<Graph> leaves_of(const Graph& tree, const Strategy& strategy, bool full_only) {
  ReductionTree rt = build_reduction_tree(good_labeling(tree), strategy);
  std::vector<Graph> out;
  for (std::size_t leaf : rt.leaves()) {
    const auto& edges = rt.nodes[leaf].edges;
    if (full_only && static_cast<int>(edges.size()) != tree.vertex_count() - 1) continue;
    out.emplace_back(tree.vertex_count(), edges);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer binomial_any(const Integer& top, long k) {
  // C(top, k) for any integer top, as a falling factorial over k!.
  if (k < 0) return 0;
  Integer num = 1;
  for (long r = 0; r < k; ++r) num *= top - r;
  return num / factorial(k);
}

}  // namespace

RootPolytope root_polytope(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("root_polytope: graph has a cycle");
  return {g, vertex_set(g), static_cast<int>(g.edge_count())};
}

RationalVector root_vector(int vertex_count, Edge e) {
  RationalVector v = RationalVector::Zero(vertex_count);
  v(e.i - 1) = 1;
  v(e.j - 1) = -1;
  return v;
}

RationalMatrix edge_matrix(const Graph& g) {
  RationalMatrix m = RationalMatrix::Zero(g.vertex_count(), static_cast<Eigen::Index>(g.edge_count()));
  for (std::size_t c = 0; c < g.edge_count(); ++c)
    m.col(static_cast<Eigen::Index>(c)) = root_vector(g.vertex_count(), g.edges()[c]);
  return m;
}

bool is_simplex(const Graph& g) { return is_alternating(g) && is_forest(g); }

std::vector<Graph> triangulate(const Graph& forest) {
  std::vector<std::vector<Graph>> lists;
  for (const ComponentFrame& frame : frames_of(forest)) {
    std::vector<Graph> mapped;
    for (const Graph& h : spanning_simplices(frame.tree())) mapped.push_back(frame.to_original(h));
    lists.push_back(std::move(mapped));
  }
  return join(forest.vertex_count(), lists);
}

std::vector<Graph> triangulate_by_reduction(const Graph& forest, const Strategy& strategy) {
  std::vector<std::vector<Graph>> lists;
  for (const ComponentFrame& frame : frames_of(forest)) {
    std::vector<Graph> mapped;
    for (const Graph& h : leaves_of(frame.tree(), strategy, true)) mapped.push_back(frame.to_original(h));
    lists.push_back(std::move(mapped));
  }
  return join(forest.vertex_count(), lists);
}

std::vector<Graph> reduction_leaves(const Graph& forest, const Strategy& strategy) {
  std::vector<std::vector<Graph>> lists;
  for (const ComponentFrame& frame : frames_of(forest)) {
    std::vector<Graph> mapped;
    for (const Graph& h : leaves_of(frame.tree(), strategy, false)) mapped.push_back(frame.to_original(h));
    lists.push_back(std::move(mapped));
  }
  return join(forest.vertex_count(), lists);
}

FVector f_vector(const Graph& forest) {
  std::vector<Integer> total{1};
  for (const ComponentFrame& frame : frames_of(forest)) {
    const FVector part = admissible_census(frame.tree());
    std::vector<Integer> next(total.size() + part.counts.size() - 1, Integer(0));
    for (std::size_t a = 0; a < total.size(); ++a)
      for (std::size_t b = 0; b < part.counts.size(); ++b) next[a + b] += total[a] * part.counts[b];
    total = std::move(next);
  }
  total.resize(std::max<std::size_t>(total.size(), forest.vertex_count()), Integer(0));
  total.resize(forest.vertex_count());
  return {total};
}

Rational volume(const Graph& forest) {
  const long l = static_cast<long>(forest.edge_count());
  return Rational(f_vector(forest).at(l)) / Rational(factorial(l));
}

bool is_unimodular(const Graph& forest) {
  const RationalMatrix m = edge_matrix(forest);
  const Eigen::Index rows = m.rows(), d = m.cols();
  if (d == 0) return true;
  Integer g = 0;
  std::vector<Eigen::Index> pick(d);
  auto visit = [&](auto&& self, Eigen::Index next, Eigen::Index filled) -> void {
    if (filled == d) {
      RationalMatrix sub(d, d);
      for (Eigen::Index r = 0; r < d; ++r) sub.row(r) = m.row(pick[r]);
      const Rational det = linalg::determinant(sub);
      g = gcd(g, Integer(abs(numerator(det))));
      return;
    }
    for (Eigen::Index r = next; r < rows; ++r) {
      pick[filled] = r;
      self(self, r + 1, filled + 1);
    }
  };
  visit(visit, 0, 0);
  return g == 1;
}

ValidityReport triangulation_validity(const Graph& forest) {
  ValidityReport report;
  const std::vector<Graph> simplices = triangulate(forest);
  const std::vector<Graph> reduced = triangulate_by_reduction(forest);
  auto fail = [&](bool& flag, std::string message) {
    flag = false;
    report.failures.push_back(std::move(message));
  };
  for (const Graph& s : simplices) {
    if (!is_simplex(s)) fail(report.simplices, "not a simplex: " + std::to_string(s.edge_count()) + " edges");
    if (!is_unimodular(s)) fail(report.unimodular, "simplex is not unimodular");
  }
  for (const ComponentFrame& frame : frames_of(forest)) {
    const std::vector<Graph> local = spanning_simplices(frame.tree());
    for (std::size_t a = 0; a < local.size(); ++a)
      for (std::size_t b = a + 1; b < local.size(); ++b) {
        const SimplexIntersection x = intersect_simplices(local[a], local[b]);
        std::vector<Edge> shared;
        std::set_intersection(local[a].edges().begin(), local[a].edges().end(), local[b].edges().begin(),
                              local[b].edges().end(), std::back_inserter(shared));
        if (!x.common_face || x.face != shared)
          fail(report.proper_intersections, "two simplices meet outside their common face");
      }
  }
  if (simplices != reduced) fail(report.methods_agree, "enumerated and reduction triangulations differ");
  const EhrhartPolynomial L = ehrhart(forest);
  const std::vector<Graph> leaves = reduction_leaves(forest);
  const long l = static_cast<long>(forest.edge_count());
  for (long t = 1; t <= 4; ++t) {
    Integer open = 0;
    for (const Graph& leaf : leaves) open += binomial_any(Integer(t - 1), static_cast<long>(leaf.edge_count()));
    Rational expected = L.evaluate(Rational(-t));
    if (l % 2) expected = -expected;
    if (Rational(open) != expected)
      fail(report.open_census, "open census fails at t = " + std::to_string(t));
  }
  return report;
}

}  // namespace rootpoly
