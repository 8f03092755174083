#include "rootpoly/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rootpoly {

namespace {

struct DisjointSets {
  explicit DisjointSets(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

bool crosses(Edge a, Edge b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

bool is_noncrossing(const Graph& g) {
  const auto& e = g.edges();
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = x + 1; y < e.size(); ++y)
      if (crosses(e[x], e[y])) return false;
  return true;
}

bool is_alternating(const Graph& g) {
  std::vector<char> head(g.vertex_count() + 1, 0), tail(g.vertex_count() + 1, 0);
  for (auto [i, j] : g.edges()) {
    tail[i] = 1;
    head[j] = 1;
  }
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (head[v] && tail[v]) return false;
  return true;
}

bool is_forest(const Graph& g) {
  DisjointSets sets(g.vertex_count() + 1);
  for (auto [i, j] : g.edges())
    if (!sets.unite(i, j)) return false;
  return true;
}

bool is_tree(const Graph& g) {
  return is_forest(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count());
}

Graph transitive_closure(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(n + 1, 0));
  for (auto [i, j] : g.edges()) reach[i][j] = 1;
  for (int i = n; i >= 1; --i)
    for (int m = i + 1; m <= n; ++m)
      if (g.contains({i, m}))
        for (int j = m + 1; j <= n; ++j)
          if (reach[m][j]) reach[i][j] = 1;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (reach[i][j]) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

std::vector<std::vector<Edge>> playable_routes(const Graph& g) {
  std::vector<std::vector<Edge>> routes;
  std::vector<Edge> current;
  auto extend = [&](auto&& self, int head) -> void {
    routes.push_back(current);
    for (Edge e : g.edges()) {
      if (e.i != head) continue;
      current.push_back(e);
      self(self, e.j);
      current.pop_back();
    }
  };
  for (Edge e : g.edges()) {
    current = {e};
    extend(extend, e.j);
  }
  return routes;
}

std::vector<Edge> vertex_set(const Graph& g) {
  std::set<Edge> ends;
  for (const auto& route : playable_routes(g)) ends.insert({route.front().i, route.back().j});
  return {ends.begin(), ends.end()};
}

std::vector<Graph> edge_components(const Graph& g) {
  DisjointSets sets(g.vertex_count() + 1);
  for (auto [i, j] : g.edges()) sets.unite(i, j);
  std::vector<int> order;
  std::vector<std::vector<Edge>> groups(g.vertex_count() + 1);
  for (Edge e : g.edges()) {
    int root = sets.find(e.i);
    if (groups[root].empty()) order.push_back(root);
    groups[root].push_back(e);
  }
  std::vector<Graph> out;
  for (int root : order) out.emplace_back(g.vertex_count(), groups[root]);
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return a.edges().front() < b.edges().front(); });
  return out;
}

CompactGraph compact(const Graph& g) {
  std::vector<int> rename(g.vertex_count() + 1, 0);
  for (auto [i, j] : g.edges()) rename[i] = rename[j] = 1;
  CompactGraph out;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (rename[v]) {
      out.vertices.push_back(v);
      rename[v] = static_cast<int>(out.vertices.size());
    }
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges()) edges.push_back({rename[i], rename[j]});
  out.graph = Graph(std::max<int>(1, static_cast<int>(out.vertices.size())), std::move(edges));
  if (out.vertices.empty()) out.vertices.push_back(1);
  return out;
}

std::vector<Graph> noncrossing_trees(int vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
  std::vector<Edge> all;
  for (int i = 1; i <= vertex_count; ++i)
    for (int j = i + 1; j <= vertex_count; ++j) all.push_back({i, j});
  const std::size_t need = static_cast<std::size_t>(vertex_count - 1);
  std::vector<Graph> out;
  std::vector<Edge> chosen;
  auto search = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() == need) {
      Graph g(vertex_count, chosen);
      if (is_forest(g)) out.push_back(std::move(g));
      return;
    }
    if (all.size() - next < need - chosen.size()) return;
    for (std::size_t x = next; x < all.size(); ++x) {
      Edge e = all[x];
      if (std::any_of(chosen.begin(), chosen.end(), [&](Edge c) { return crosses(c, e); })) continue;
      chosen.push_back(e);
      if (is_forest(Graph(vertex_count, chosen))) self(self, x + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// True when e must carry a smaller label than f in a good forest.
bool must_precede(Edge e, Edge f) {
  if (e.j == f.i) return true;                   // (i,j) then (j,k)
  if (e.i == f.i && f.j < e.j) return true;      // (i,k) then (i,j), j < k
  if (e.j == f.j && f.i < e.i) return true;      // (k,j) then (i,j), i < k
  return false;
}

}  // namespace

LabeledGraph good_labeling(const Graph& forest) {
  if (!is_noncrossing(forest)) throw std::invalid_argument("good_labeling: graph is crossing");
  if (!is_forest(forest)) throw std::invalid_argument("good_labeling: graph has a cycle");
  const auto& e = forest.edges();
  const std::size_t m = e.size();
  std::vector<int> indegree(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (x != y && must_precede(e[x], e[y])) ++indegree[y];
  std::vector<char> placed(m, 0);
  std::vector<Edge> order;
  while (order.size() < m) {
    std::size_t pick = m;
    for (std::size_t x = 0; x < m; ++x)
      if (!placed[x] && indegree[x] == 0) {
        pick = x;
        break;
      }
    if (pick == m) throw std::logic_error("good_labeling: precedence relation is cyclic");
    placed[pick] = 1;
    order.push_back(e[pick]);
    for (std::size_t y = 0; y < m; ++y)
      if (!placed[y] && must_precede(e[pick], e[y])) --indegree[y];
  }
  return LabeledGraph(forest.vertex_count(), std::move(order));
}

bool is_good(const LabeledGraph& g) {
  const auto& e = g.by_label();
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = 0; y < e.size(); ++y) {
      if (x == y) continue;
      if (crosses(e[x], e[y])) return false;
      if (must_precede(e[x], e[y]) && x > y) return false;
    }
  return true;
}

LabeledGraph lexicographic_labels(const Graph& forest) {
  if (!is_noncrossing(forest) || !is_alternating(forest) || !is_forest(forest))
    throw std::invalid_argument("lexicographic_labels: need a noncrossing alternating forest");
  std::vector<Edge> order = forest.edges();
  std::sort(order.begin(), order.end(), [](Edge a, Edge b) {
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  });
  return LabeledGraph(forest.vertex_count(), std::move(order));
}

// ---------------------------------------------------------------------------

Integer FVector::total() const {
  Integer sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

Integer schroeder(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::domain_error("schroeder: need 0 <= k <= n-1");
  return binomial(n + k + 1, n) * binomial(n - 1, k) / (n + 1);
}

Integer catalan(int n) {
  if (n < 0) throw std::domain_error("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

bool diagonals_cross(Diagonal x, Diagonal y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

std::vector<Diagonal> forest_to_diagonals(const Graph& forest) {
  const int top = forest.vertex_count();
  if (!forest.contains({1, top}))
    throw std::invalid_argument("forest_to_diagonals: forest must contain (1, n+1)");
  if (!is_noncrossing(forest) || !is_alternating(forest) || !is_forest(forest))
    throw std::invalid_argument("forest_to_diagonals: need a noncrossing alternating forest");
  std::vector<Diagonal> out;
  for (auto [i, j] : forest.edges())
    if (!(i == 1 && j == top)) out.push_back({i, j + 1});
  std::sort(out.begin(), out.end());
  return out;
}

Graph diagonals_to_forest(int n, std::span<const Diagonal> diagonals) {
  if (n < 1) throw std::invalid_argument("diagonals_to_forest: n must be positive");
  std::vector<Edge> edges{{1, n + 1}};
  for (Diagonal d : diagonals) {
    if (d.a < 1 || d.b > n + 2 || d.b - d.a < 2 || (d.a == 1 && d.b == n + 2))
      throw std::invalid_argument("diagonals_to_forest: not a diagonal of the polygon");
    edges.push_back({d.a, d.b - 1});
  }
  for (std::size_t x = 0; x < diagonals.size(); ++x)
    for (std::size_t y = x + 1; y < diagonals.size(); ++y)
      if (diagonals_cross(diagonals[x], diagonals[y]))
        throw std::invalid_argument("diagonals_to_forest: diagonals cross");
  return Graph(n + 1, std::move(edges));
}

}  // namespace rootpoly
