#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "rootpoly/combinatorics.hpp"

namespace rootpoly {

namespace {

using EdgeList = std::vector<Edge>;

std::pair<int, int> span_of(const EdgeList& edges) {
  int lo = edges.front().i, hi = edges.front().j;
  for (auto [i, j] : edges) {
    lo = std::min(lo, i);
    hi = std::max(hi, j);
  }
  return {lo, hi};
}

EdgeList path_between(const EdgeList& edges, int from, int to) {
  std::map<int, std::vector<Edge>> adjacent;
  for (Edge e : edges) {
    adjacent[e.i].push_back(e);
    adjacent[e.j].push_back(e);
  }
  std::map<int, Edge> via;
  std::queue<int> pending;
  pending.push(from);
  via[from] = {0, 0};
  while (!pending.empty()) {
    int v = pending.front();
    pending.pop();
    for (Edge e : adjacent[v]) {
      int w = e.i == v ? e.j : e.i;
      if (via.count(w)) continue;
      via[w] = e;
      pending.push(w);
    }
  }
  EdgeList path;
  for (int v = to; v != from;) {
    Edge e = via.at(v);
    path.push_back(e);
    v = e.i == v ? e.j : e.i;
  }
  std::sort(path.begin(), path.end());
  return path;
}

// Connected pieces of `edges`, never joining through `cut` (0 for none).
std::vector<EdgeList> pieces(const EdgeList& edges, int cut) {
  std::vector<EdgeList> out;
  std::vector<char> used(edges.size(), 0);
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    EdgeList piece;
    std::set<int> frontier;
    auto take = [&](std::size_t x) {
      used[x] = 1;
      piece.push_back(edges[x]);
      if (edges[x].i != cut) frontier.insert(edges[x].i);
      if (edges[x].j != cut) frontier.insert(edges[x].j);
    };
    take(start);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t x = 0; x < edges.size(); ++x)
        if (!used[x] && (frontier.count(edges[x].i) || frontier.count(edges[x].j))) {
          take(x);
          grew = true;
        }
    }
    std::sort(piece.begin(), piece.end());
    out.push_back(std::move(piece));
  }
  std::sort(out.begin(), out.end(), [](const EdgeList& a, const EdgeList& b) {
    return span_of(a) < span_of(b);
  });
  return out;
}

void decompose(const EdgeList& edges, const Graph& host, std::vector<PseudoComponent>& out) {
  auto [lo, hi] = span_of(edges);
  EdgeList path = path_between(edges, lo, hi);
  PseudoComponent component{path, lo, hi, true, true};
  for (auto [i, j] : host.edges()) {
    if (j == lo && i < lo) component.is_left = false;
    if (i == hi && j > hi) component.is_right = false;
  }
  out.push_back(component);

  std::set<int> on_path;
  for (auto [i, j] : path) on_path.insert(i), on_path.insert(j);
  EdgeList rest;
  for (Edge e : edges)
    if (!std::binary_search(path.begin(), path.end(), e)) rest.push_back(e);
  if (rest.empty()) return;

  for (const EdgeList& part : pieces(rest, 0)) {
    std::set<int> touched;
    for (auto [i, j] : part) {
      if (on_path.count(i)) touched.insert(i);
      if (on_path.count(j)) touched.insert(j);
    }
    if (touched.size() != 1) throw std::logic_error("pseudo_components: residual piece meets the path twice");
    const int v = *touched.begin();
    auto [plo, phi] = span_of(part);
    if (v == plo || v == phi) {
      decompose(part, host, out);
      continue;
    }
    EdgeList below, above;
    for (const EdgeList& branch : pieces(part, v)) {
      auto [blo, bhi] = span_of(branch);
      if (bhi <= v)
        below.insert(below.end(), branch.begin(), branch.end());
      else if (blo >= v)
        above.insert(above.end(), branch.begin(), branch.end());
      else
        throw std::logic_error("pseudo_components: branch straddles its attaching vertex");
    }
    std::sort(below.begin(), below.end());
    std::sort(above.begin(), above.end());
    decompose(below, host, out);
    decompose(above, host, out);
  }
}

}  // namespace

std::vector<PseudoComponent> pseudo_components(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("pseudo_components: input is not a spanning tree");
  if (!is_noncrossing(tree)) throw std::invalid_argument("pseudo_components: input is crossing");
  std::vector<PseudoComponent> out;
  if (tree.empty()) return out;
  decompose(tree.edges(), tree, out);
  return out;
}

}  // namespace rootpoly
