#include "rootpoly/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rootpoly {

namespace {

void validate_edges(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (const Edge& e : edges) {
    if (e.i < 1 || e.j > vertex_count || e.i >= e.j)
      throw std::invalid_argument("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                  ") is not of the form 1 <= i < j <= " +
                                  std::to_string(vertex_count));
  }
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  validate_edges(vertex_count_, edges_);
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph has a repeated edge");
}

bool Graph::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Graph Graph::with_edge(Edge e) const {
  std::vector<Edge> edges = edges_;
  edges.push_back(e);
  return Graph(vertex_count_, std::move(edges));
}

Graph Graph::without_edge(Edge e) const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& f : edges_)
    if (f != e) edges.push_back(f);
  return Graph(vertex_count_, std::move(edges));
}

LabeledGraph::LabeledGraph(int vertex_count, std::vector<Edge> by_label)
    : vertex_count_(vertex_count), by_label_(std::move(by_label)) {
  validate_edges(vertex_count_, by_label_);
  std::vector<Edge> sorted = by_label_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("labeled graph has a repeated edge");
}

Edge LabeledGraph::edge_with_label(int label) const {
  if (label < 1 || label > static_cast<int>(by_label_.size()))
    throw std::out_of_range("no edge with label " + std::to_string(label));
  return by_label_[label - 1];
}

int LabeledGraph::label_of(Edge e) const {
  const auto it = std::find(by_label_.begin(), by_label_.end(), e);
  return it == by_label_.end() ? 0 : static_cast<int>(it - by_label_.begin()) + 1;
}

}  // namespace rootpoly
