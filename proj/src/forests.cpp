#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rootpoly/combinatorics.hpp"

namespace rootpoly {

namespace {

struct Requirement {
  int first;
  int last;
  bool right;  // needs (i1, last) with i1 <= first; otherwise (first, j1) with j1 >= last
};

bool satisfied(const std::vector<Edge>& forest, const Requirement& r) {
  return std::any_of(forest.begin(), forest.end(), [&](Edge e) {
    return r.right ? (e.j == r.last && e.i <= r.first) : (e.i == r.first && e.j >= r.last);
  });
}

// Visits every admissible forest of `tree` once.
template <class Visit>
void for_each_admissible(const Graph& tree, Visit&& visit) {
  if (!is_tree(tree)) throw std::invalid_argument("admissible forests: input is not a spanning tree");
  if (!is_noncrossing(tree)) throw std::invalid_argument("admissible forests: input is crossing");
  const int top = tree.vertex_count();
  std::vector<Requirement> needs;
  for (const auto& pc : pseudo_components(tree)) {
    if (pc.is_right) needs.push_back({pc.first, pc.last, true});
    if (pc.is_left) needs.push_back({pc.first, pc.last, false});
  }
  const std::vector<Edge> pool = transitive_closure(tree).edges();
  std::vector<Edge> chosen{{1, top}};
  std::vector<char> head(top + 1, 0), tail(top + 1, 0);
  head[top] = tail[1] = 1;
  std::vector<int> parent(top + 1);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };

  auto search = [&](auto&& self, std::size_t next) -> void {
    if (std::all_of(needs.begin(), needs.end(), [&](const Requirement& r) { return satisfied(chosen, r); }))
      visit(Graph(top, chosen));
    for (std::size_t x = next; x < pool.size(); ++x) {
      Edge e = pool[x];
      if (e == Edge{1, top}) continue;
      if (head[e.i] || tail[e.j]) continue;
      if (std::any_of(chosen.begin(), chosen.end(), [&](Edge c) { return crosses(c, e); })) continue;
      int a = find(e.i), b = find(e.j);
      if (a == b) continue;
      parent[b] = a;
      char old_tail = tail[e.i], old_head = head[e.j];
      tail[e.i] = head[e.j] = 1;
      chosen.push_back(e);
      self(self, x + 1);
      chosen.pop_back();
      tail[e.i] = old_tail;
      head[e.j] = old_head;
      parent[b] = b;
    }
  };
  if (top == 1) return;
  std::iota(parent.begin(), parent.end(), 0);
  parent[top] = 1;
  search(search, 0);
}

}  // namespace

std::vector<Graph> enumerate_admissible_forests(const Graph& tree, int k) {
  std::vector<Graph> out;
  for_each_admissible(tree, [&](Graph g) {
    if (static_cast<int>(g.edge_count()) == k) out.push_back(std::move(g));
  });
  std::sort(out.begin(), out.end());
  return out;
}

FVector admissible_census(const Graph& tree) {
  FVector f{std::vector<Integer>(tree.vertex_count(), Integer(0))};
  if (tree.vertex_count() == 1) {
    f.counts[0] = 1;
    return f;
  }
  for_each_admissible(tree, [&](const Graph& g) { f.counts[g.edge_count()] += 1; });
  return f;
}

}  // namespace rootpoly
