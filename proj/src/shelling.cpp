#include "rootpoly/shelling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rootpoly/combinatorics.hpp"
#include "rootpoly/intersection.hpp"
#include "rootpoly/polytope.hpp"

namespace rootpoly {

namespace {

std::string edges_text(const std::vector<Edge>& edges) {
  std::string out = "{";
  for (std::size_t x = 0; x < edges.size(); ++x) {
    if (x) out += ",";
    out += "(" + std::to_string(edges[x].i) + "," + std::to_string(edges[x].j) + ")";
  }
  return out + "}";
}

bool subset_of(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<std::vector<Edge>> maximal(const std::vector<std::vector<Edge>>& faces) {
  std::set<std::vector<Edge>> out;
  for (const auto& f : faces) {
    bool covered = false;
    for (const auto& g : faces)
      if (g.size() > f.size() && subset_of(f, g)) covered = true;
    if (!covered) out.insert(f);
  }
  return out;
}

void require_tree(const Graph& t) {
  if (!is_tree(t) || !is_noncrossing(t))
    throw std::invalid_argument("shelling: need a noncrossing spanning tree");
}

}  // namespace

Edge flip_target(const Graph& tree, Edge e) {
  const auto [i, j] = e;
  int i_prime = 0, j_prime = 0, degree = 0;
  for (auto [a, b] : tree.edges()) {
    if (b == j && a < i) i_prime = std::max(i_prime, a);
    if (a == i && b < j) j_prime = std::max(j_prime, b);
    if (a == i || b == i) ++degree;
  }
  if (degree == 1) j_prime = i;
  if (i_prime == 0 || j_prime == 0)
    throw std::logic_error("flip_target: no flip partner for " + edges_text({e}));
  return {i_prime, j_prime};
}

std::vector<ShellingStep> shelling_order(const Graph& t) {
  require_tree(t);
  const int top = t.vertex_count();
  const Graph closure = transitive_closure(t);
  std::vector<Graph> facets = triangulate(t);
  std::sort(facets.begin(), facets.end());

  std::vector<ShellingStep> steps;
  for (Graph& tree : facets) {
    ShellingStep step{tree, {}, {}, {}};
    for (int v = 1; v <= top; ++v) {
      int largest = 0;
      bool left = true;
      for (auto [a, b] : tree.edges()) {
        if (b == v) left = false;
        if (a == v) largest = std::max(largest, b);
      }
      if (left && largest) step.S_set.push_back({v, largest});
    }
    for (Edge e : step.S_set) {
      if (e == Edge{1, top}) continue;
      if (closure.contains(flip_target(tree, e)))
        step.attach_set.push_back(e);
      else
        step.M_set.push_back(e);
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

ShellingReport shelling_verify(const Graph& t) {
  ShellingReport report;
  const std::vector<ShellingStep> steps = shelling_order(t);
  for (std::size_t m = 0; m < steps.size(); ++m) {
    const Graph& current = steps[m].tree;
    std::vector<std::vector<Edge>> faces;
    for (std::size_t l = 0; l < m; ++l) {
      const SimplexIntersection x = intersect_simplices(current, steps[l].tree);
      if (!x.common_face) {
        report.failures.push_back("facets " + std::to_string(l + 1) + " and " + std::to_string(m + 1) +
                                  " meet outside a common face");
        continue;
      }
      faces.push_back(x.face);
    }
    std::set<std::vector<Edge>> expected;
    for (Edge e : steps[m].attach_set) expected.insert(current.without_edge(e).edges());
    const std::set<std::vector<Edge>> found = m == 0 ? std::set<std::vector<Edge>>{} : maximal(faces);
    if (found != expected) {
      std::string text = "step " + std::to_string(m + 1) + " " + edges_text(current.edges()) +
                         ": attach set " + edges_text(steps[m].attach_set) + " but maximal intersections";
      for (const auto& f : found) text += " " + edges_text(f);
      report.failures.push_back(text);
    }
  }
  report.ok = report.failures.empty();
  return report;
}

bool is_shelling_order(const std::vector<Graph>& trees) {
  for (std::size_t m = 1; m < trees.size(); ++m) {
    std::vector<std::vector<Edge>> faces;
    for (std::size_t l = 0; l < m; ++l) {
      const SimplexIntersection x = intersect_simplices(trees[m], trees[l]);
      if (!x.common_face) return false;
      faces.push_back(x.face);
    }
    for (const auto& f : maximal(faces))
      if (f.size() + 1 != trees[m].edge_count()) return false;
  }
  return true;
}

std::vector<Integer> EhrhartSeries::expand(int terms) const {
  std::vector<Integer> out(terms, Integer(0));
  const long d = denominator_power;
  for (int t = 0; t < terms; ++t)
    for (std::size_t l = 0; l < numerator.size() && static_cast<int>(l) <= t; ++l)
      out[t] += numerator[l] * binomial(t - static_cast<long>(l) + d - 1, d - 1);
  return out;
}

std::string EhrhartSeries::format() const {
  std::string out = "num = [";
  for (std::size_t l = 0; l < numerator.size(); ++l) {
    if (l) out += ", ";
    out += numerator[l].str();
  }
  return out + "]; den = (1-x)^" + std::to_string(denominator_power);
}

EhrhartSeries ehrhart_series(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("ehrhart_series: need a spanning tree");
  const Graph tree = uncross(t).graph;
  EhrhartSeries series;
  series.denominator_power = tree.vertex_count();
  series.numerator.assign(tree.vertex_count(), Integer(0));
  for (const ShellingStep& step : shelling_order(tree)) series.numerator[step.attach_set.size()] += 1;
  while (series.numerator.size() > 1 && series.numerator.back() == 0) series.numerator.pop_back();
  return series;
}

}  // namespace rootpoly
