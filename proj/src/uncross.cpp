#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rootpoly/combinatorics.hpp"

namespace rootpoly {

int Uncrossing::preimage(int w) const {
  auto it = std::find(relabel.begin() + 1, relabel.end(), w);
  if (it == relabel.end()) throw std::out_of_range("Uncrossing::preimage: no such vertex");
  return static_cast<int>(it - relabel.begin());
}

Graph Uncrossing::pull_back(const Graph& h) const {
  std::vector<Edge> edges;
  for (auto [a, b] : h.edges()) {
    int i = preimage(a), j = preimage(b);
    if (i > j) throw std::invalid_argument("Uncrossing::pull_back: edge reverses direction");
    edges.push_back({i, j});
  }
  return Graph(static_cast<int>(relabel.size()) - 1, std::move(edges));
}

Uncrossing uncross(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("uncross: graph has a cycle");
  const int n = g.vertex_count();
  Uncrossing out{g, std::vector<int>(n + 1)};
  std::iota(out.relabel.begin(), out.relabel.end(), 0);
  if (is_noncrossing(g)) return out;

  std::vector<std::vector<int>> neighbors(n + 1);
  for (auto [i, j] : g.edges()) {
    neighbors[i].push_back(j);
    neighbors[j].push_back(i);
  }
  for (auto& list : neighbors) std::sort(list.begin(), list.end());

  // Lower neighbors of a vertex go to its left, higher ones to its right; no
  // edge of a finished block passes over the block's root.
  std::vector<int> order;
  std::vector<char> seen(n + 1, 0);
  auto arrange = [&](auto&& self, int root) -> void {
    seen[root] = 1;
    for (int w : neighbors[root])
      if (w < root && !seen[w]) self(self, w);
    order.push_back(root);
    for (int w : neighbors[root])
      if (w > root && !seen[w]) self(self, w);
  };
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) arrange(arrange, v);

  for (int position = 0; position < n; ++position) out.relabel[order[position]] = position + 1;
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges()) edges.push_back({out.relabel[i], out.relabel[j]});
  out.graph = Graph(n, std::move(edges));
  return out;
}

}  // namespace rootpoly
