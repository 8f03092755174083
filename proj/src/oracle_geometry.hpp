#pragma once

// Private geometry for the oracle. It shares no code with the polytope engine.

#include <cstdint>
#include <vector>

#include "rootpoly/graph.hpp"

namespace rootpoly::oracle::detail {

using IntVector = std::vector<std::int64_t>;

/// Pairs (i, j) joined by an increasing edge path of g.
std::vector<Edge> increasing_reach(const Graph& g);

bool has_cycle(int vertex_count, const std::vector<Edge>& edges);
bool pair_crosses(Edge a, Edge b);

/// conv(0 and the given points) inside its own linear span, with integer data.
class Hull {
 public:
  struct Facet {
    IntVector normal;  // in scaled span coordinates
    std::int64_t offset = 0;
  };

  Hull(int ambient, const std::vector<IntVector>& points);

  int ambient() const { return ambient_; }
  int dimension() const { return dimension_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// Scaled coordinates of x when x lies in the span.
  bool coordinates(const IntVector& x, IntVector& out) const;

 private:
  int ambient_ = 0;
  int dimension_ = 0;
  std::vector<IntVector> basis_;       // dimension_ vectors in Z^ambient
  std::vector<int> rows_;              // coordinates where the basis is invertible
  std::vector<IntVector> adjugate_;    // det * inverse of the basis restricted to rows_
  std::int64_t det_ = 1;
  std::vector<Facet> facets_;
};

}  // namespace rootpoly::oracle::detail
