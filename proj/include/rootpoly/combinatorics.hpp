#pragma once

#include <compare>
#include <span>
#include <vector>

#include "rootpoly/arith.hpp"
#include "rootpoly/graph.hpp"

namespace rootpoly {

// ---------------------------------------------------------------------------
// Structural predicates

/// No edges (i,k), (j,l) with i < j < k < l.
bool is_noncrossing(const Graph& g);
/// No edges (i,j), (j,k) with i < j < k.
bool is_alternating(const Graph& g);
/// The underlying undirected graph is acyclic.
bool is_forest(const Graph& g);
/// Acyclic and connected on all of [vertex_count].
bool is_tree(const Graph& g);

bool crosses(Edge a, Edge b);

/// All (i,j) joined by an increasing chain of edges of g.
Graph transitive_closure(const Graph& g);

/// Sequences (i1,j1),...,(il,jl) of edges with j_r = i_{r+1}.
std::vector<std::vector<Edge>> playable_routes(const Graph& g);

/// The roots of type A inside the cone of g, as pairs (i,j) meaning e_i - e_j.
/// Sorted. Each route contributes its endpoints (i1, jl).
std::vector<Edge> vertex_set(const Graph& g);

/// Connected components with at least one edge, each as a graph on the same
/// vertex set.
std::vector<Graph> edge_components(const Graph& g);

/// Restrict to the vertices touched by `g`'s edges, renumbered 1..m in order.
/// `vertices[r - 1]` is the original name of new vertex r.
struct CompactGraph {
  Graph graph;
  std::vector<int> vertices;
};
CompactGraph compact(const Graph& g);

/// All noncrossing trees on [vertex_count] (spanning, connected).
std::vector<Graph> noncrossing_trees(int vertex_count);

// ---------------------------------------------------------------------------
// Pseudo-components

/// A path piece of the recursive decomposition of a noncrossing tree.
struct PseudoComponent {
  std::vector<Edge> edges;  // sorted
  int first = 0;            // minimal vertex i of the span [i, j]
  int last = 0;             // maximal vertex j
  bool is_left = false;     // host tree has no edge (s, first) with s < first
  bool is_right = false;    // host tree has no edge (last, s) with s > last

  friend bool operator==(const PseudoComponent&, const PseudoComponent&) = default;
};

/// Decomposition of a noncrossing tree on [n+1]: the path from 1 to n+1, then
/// recursively the decomposition of each residual subtree. The order is
/// depth-first in discovery order. Throws std::invalid_argument for crossing
/// graphs and non-trees.
std::vector<PseudoComponent> pseudo_components(const Graph& tree);

// ---------------------------------------------------------------------------
// Labelings

/// A labeling satisfying the four good-forest conditions. Throws
/// std::invalid_argument for crossing or cyclic graphs.
LabeledGraph good_labeling(const Graph& forest);

bool is_good(const LabeledGraph& g);

/// (i1,j1) gets the smaller label iff j1 > j2, or j1 == j2 and i1 > i2.
LabeledGraph lexicographic_labels(const Graph& forest);

// ---------------------------------------------------------------------------
// Admissible forests and counting

/// Count of admissible forests by edge number; `counts[k]` for k = 0..n.
struct FVector {
  std::vector<Integer> counts;

  Integer at(std::size_t k) const { return k < counts.size() ? counts[k] : Integer(0); }
  Integer total() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Noncrossing alternating spanning forests of the closure of a noncrossing tree
/// with k edges that contain (1, n+1) and meet every pseudo-component
/// constraint: for a right component on [i,j] some edge (i1, j) with i1 <= i, for
/// a left component on [i,j] some edge (i, j1) with j1 >= j.
std::vector<Graph> enumerate_admissible_forests(const Graph& tree, int k);

/// Counts of enumerate_admissible_forests over k = 0..n.
FVector admissible_census(const Graph& tree);

/// s_{n,k} = C(n+k+1, n) C(n-1, k) / (n+1); throws std::domain_error unless
/// 0 <= k <= n-1.
Integer schroeder(int n, int k);
Integer catalan(int n);

/// Diagonal (a, b), a < b, of the convex (n+2)-gon with vertices 1..n+2.
struct Diagonal {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

/// Edge (i, j) != (1, n+1) of the forest maps to the diagonal (i, j+1); the
/// result is sorted.
std::vector<Diagonal> forest_to_diagonals(const Graph& forest);
/// Inverse of forest_to_diagonals for the (n+2)-gon.
Graph diagonals_to_forest(int n, std::span<const Diagonal> diagonals);
bool diagonals_cross(Diagonal x, Diagonal y);

// ---------------------------------------------------------------------------
// Uncrossing

/// `relabel[v]` is the image of vertex v (index 0 unused).
struct Uncrossing {
  Graph graph;
  std::vector<int> relabel;

  int image(int v) const { return relabel[v]; }
  int preimage(int w) const;
  Graph pull_back(const Graph& h) const;
};

/// A noncrossing isomorphic copy of an acyclic graph under a relabeling that
/// keeps every edge increasing. Identity for noncrossing input. Throws
/// std::invalid_argument on cycles.
Uncrossing uncross(const Graph& g);

}  // namespace rootpoly
