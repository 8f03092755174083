#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace rootpoly {

/// Directed edge (i, j) with i < j; it stands for the root e_i - e_j and the
/// algebra letter x_ij. Vertices are 1-based.
struct Edge {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple graph on [vertex_count] with edges stored sorted in (i, j) order.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on an edge outside 1 <= i < j <= vertex_count
  /// or on a repeated edge.
  explicit Graph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  friend auto operator<=>(const Graph&, const Graph&) = default;
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 1;
  std::vector<Edge> edges_;
};

/// Graph whose edges carry the labels 1..|E|; `by_label()[a - 1]` is the edge
/// labeled a. Read left to right it is the noncommutative monomial of the graph.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(int vertex_count, std::vector<Edge> by_label);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& by_label() const { return by_label_; }
  std::size_t edge_count() const { return by_label_.size(); }
  Edge edge_with_label(int label) const;
  /// 0 when the edge is absent.
  int label_of(Edge e) const;
  Graph base() const { return Graph(vertex_count_, by_label_); }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int vertex_count_ = 1;
  std::vector<Edge> by_label_;
};

}  // namespace rootpoly
