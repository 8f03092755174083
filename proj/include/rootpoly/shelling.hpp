#pragma once

#include <string>
#include <vector>

#include "rootpoly/arith.hpp"
#include "rootpoly/graph.hpp"

namespace rootpoly {

struct ShellingStep {
  Graph tree;
  std::vector<Edge> S_set;       // (i, largest neighbor of i) for left vertices i
  std::vector<Edge> M_set;       // members whose flip leaves the closure
  std::vector<Edge> attach_set;  // S minus M, without (1, n+1)
};

/// Maximal simplices in lexicographic facet order with their attachment data.
/// Throws std::invalid_argument unless t is a noncrossing spanning tree.
std::vector<ShellingStep> shelling_order(const Graph& t);

/// The flip partner (i', j') of (i, j) in a noncrossing alternating tree.
Edge flip_target(const Graph& tree, Edge e);

struct ShellingReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Recomputes every intersection with earlier facets geometrically and compares
/// it with the facets named by attach_set.
ShellingReport shelling_verify(const Graph& t);

/// Whether the given order of full-dimensional simplices is a shelling.
bool is_shelling_order(const std::vector<Graph>& trees);

/// numerator[l] = number of steps with |attach_set| = l; J = numerator / (1-x)^(n+1).
struct EhrhartSeries {
  std::vector<Integer> numerator;
  int denominator_power = 1;

  /// Coefficients of x^0..x^terms-1 of the expanded series.
  std::vector<Integer> expand(int terms) const;
  std::string format() const;
};

/// Crossing trees are uncrossed first.
EhrhartSeries ehrhart_series(const Graph& t);

}  // namespace rootpoly
