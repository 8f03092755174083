#pragma once

#include <string>
#include <vector>

#include "rootpoly/arith.hpp"
#include "rootpoly/combinatorics.hpp"
#include "rootpoly/linalg.hpp"
#include "rootpoly/reduction.hpp"

namespace rootpoly {

/// conv(0, e_i - e_j for every playable route from i to j) for an acyclic graph.
struct RootPolytope {
  Graph generator_graph;
  std::vector<Edge> vertex_roots;
  int dimension = 0;
};

/// Throws std::invalid_argument on cycles.
RootPolytope root_polytope(const Graph& g);

/// e_i - e_j in Z^vertex_count as a rational column.
RationalVector root_vector(int vertex_count, Edge e);

/// Columns are the root vectors of g's edges in edge order.
RationalMatrix edge_matrix(const Graph& g);

/// Alternating and acyclic.
bool is_simplex(const Graph& g);

/// Maximal simplices of the canonical triangulation: the noncrossing alternating
/// spanning trees of the closure, taken per component and joined. Crossing
/// components are uncrossed and the result is mapped back.
std::vector<Graph> triangulate(const Graph& forest);

/// The same simplices read off the full-dimensional leaves of a B-reduction tree.
std::vector<Graph> triangulate_by_reduction(const Graph& forest, const Strategy& strategy = {});

/// All leaves of the B-reduction tree (every dimension), labels dropped.
std::vector<Graph> reduction_leaves(const Graph& forest, const Strategy& strategy = {});

/// Admissible forest counts, convolved over components; size vertex_count.
FVector f_vector(const Graph& forest);

/// L(t) stored as sum of binomial[i] C(t+i, i) and as sum of monomial[d] t^d.
struct EhrhartPolynomial {
  std::vector<Rational> binomial;
  std::vector<Rational> monomial;

  Rational evaluate(const Rational& t) const;
  int degree() const;
  /// `L(t) = c_d t^d + ... + c_0`.
  std::string format() const;
  friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) = default;
};

/// Expands sum a_i C(t+i, i) into monomial coefficients.
std::vector<Rational> binomial_to_monomial(const std::vector<Rational>& binomial);

/// (-1)^l sum_i (-1)^i f_i C(t+i, i), l the edge count.
EhrhartPolynomial ehrhart(const Graph& forest);

/// Closed form for the full root polytope of type A_n.
EhrhartPolynomial ehrhart_closed_A(int n);

/// f_l / l!.
Rational volume(const Graph& forest);

struct ValidityReport {
  bool simplices = true;
  bool unimodular = true;
  bool proper_intersections = true;
  bool methods_agree = true;
  bool open_census = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks the canonical triangulation of a noncrossing tree (or forest).
ValidityReport triangulation_validity(const Graph& forest);

/// gcd of the maximal minors of the edge matrix is 1.
bool is_unimodular(const Graph& forest);

}  // namespace rootpoly
