#pragma once

#include <vector>

#include "rootpoly/graph.hpp"
#include "rootpoly/linalg.hpp"

namespace rootpoly {

/// P(A) and P(B) for spanning alternating trees A, B on the same vertices.
/// `vertices` lists the vertices of the intersection in the cone coordinates of
/// A. The intersection is a common face exactly when every vertex is 0 or a
/// root of both trees, and then `face` holds those shared edges.
struct SimplexIntersection {
  std::vector<RationalVector> vertices;
  bool common_face = false;
  std::vector<Edge> face;
};

/// Throws std::invalid_argument unless both graphs are spanning trees.
SimplexIntersection intersect_simplices(const Graph& a, const Graph& b);

}  // namespace rootpoly
