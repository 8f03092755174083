#include "rootpoly/intersection.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootpoly/combinatorics.hpp"
#include "rootpoly/polytope.hpp"

namespace rootpoly {

namespace {

// The edge vectors with the last coordinate dropped: an invertible square
// matrix for a spanning tree.
RationalMatrix reduced_basis(const Graph& tree) {
  const RationalMatrix full = edge_matrix(tree);
  return full.topRows(full.rows() - 1);
}

// 0 for the origin, a+1 for the unit vector e_a, -1 otherwise.
int classify(const RationalVector& v) {
  int hit = 0;
  for (Eigen::Index a = 0; a < v.size(); ++a) {
    if (v(a) == 0) continue;
    if (v(a) != 1 || hit) return -1;
    hit = static_cast<int>(a) + 1;
  }
  return hit;
}

}  // namespace

SimplexIntersection intersect_simplices(const Graph& a, const Graph& b) {
  if (!is_tree(a) || !is_tree(b) || a.vertex_count() != b.vertex_count())
    throw std::invalid_argument("intersect_simplices: need spanning trees on the same vertices");
  const Eigen::Index n = static_cast<Eigen::Index>(a.edge_count());
  SimplexIntersection out;
  if (n == 0) {
    out.vertices.push_back(RationalVector::Zero(0));
    out.common_face = true;
    return out;
  }
  const RationalMatrix basis_a = reduced_basis(a);
  const auto inv_b = linalg::inverse(reduced_basis(b));
  if (!inv_b || !linalg::inverse(basis_a)) throw std::logic_error("intersect_simplices: singular basis");
  const RationalMatrix change = *inv_b * basis_a;  // B-coordinates of A's coordinates

  // Constraints G lambda <= h: lambda >= 0, sum lambda <= 1, and the same for
  // the B-coordinates.
  const Eigen::Index rows = 2 * n + 2;
  RationalMatrix G = RationalMatrix::Zero(rows, n);
  RationalVector h = RationalVector::Zero(rows);
  for (Eigen::Index r = 0; r < n; ++r) {
    G(r, r) = -1;
    G(n, r) = 1;
    G.row(n + 1 + r) = -change.row(r);
    for (Eigen::Index c = 0; c < n; ++c) G(2 * n + 1, c) += change(r, c);
  }
  h(n) = 1;
  h(2 * n + 1) = 1;

  std::vector<Eigen::Index> pick(n);
  auto visit = [&](auto&& self, Eigen::Index next, Eigen::Index filled) -> void {
    if (filled == n) {
      RationalMatrix sub(n, n);
      RationalVector rhs(n);
      for (Eigen::Index r = 0; r < n; ++r) {
        sub.row(r) = G.row(pick[r]);
        rhs(r) = h(pick[r]);
      }
      const auto point = linalg::solve(sub, rhs);
      if (!point) return;
      const RationalVector slack = h - G * *point;
      for (Eigen::Index r = 0; r < rows; ++r)
        if (slack(r) < 0) return;
      if (std::find(out.vertices.begin(), out.vertices.end(), *point) == out.vertices.end())
        out.vertices.push_back(*point);
      return;
    }
    for (Eigen::Index r = next; r < rows; ++r) {
      pick[filled] = r;
      self(self, r + 1, filled + 1);
    }
  };
  visit(visit, 0, 0);

  out.common_face = true;
  for (const RationalVector& v : out.vertices) {
    const int in_a = classify(v);
    const int in_b = classify(change * v);
    if (in_a < 0 || in_b < 0 || (in_a == 0) != (in_b == 0)) {
      out.common_face = false;
      continue;
    }
    if (in_a == 0) continue;
    const Edge ea = a.edges()[in_a - 1], eb = b.edges()[in_b - 1];
    if (ea != eb) {
      out.common_face = false;
      continue;
    }
    out.face.push_back(ea);
  }
  std::sort(out.face.begin(), out.face.end());
  return out;
}

}  // namespace rootpoly
