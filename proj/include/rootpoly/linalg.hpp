#pragma once

#include <optional>
#include <utility>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "rootpoly/arith.hpp"

namespace rootpoly {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

namespace linalg {

/// Row echelon form by exact elimination; returns the rank.
template <class Derived>
Eigen::Index echelon(Eigen::MatrixBase<Derived>& m) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(rank, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

inline Eigen::Index rank(RationalMatrix m) { return echelon(m); }

inline Rational determinant(RationalMatrix m) {
  Rational det = 1;
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

/// Unique solution of a square system, or nothing when singular.
inline std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  const Eigen::Index n = a.rows();
  RationalMatrix m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    m.row(pivot).swap(m.row(col));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c <= n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  RationalVector x(n);
  for (Eigen::Index r = 0; r < n; ++r) x(r) = m(r, n) / m(r, r);
  return x;
}

/// Inverse of a square matrix, or nothing when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const Eigen::Index n = a.rows();
  RationalMatrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    RationalVector unit = RationalVector::Zero(n);
    unit(c) = 1;
    auto x = solve(a, unit);
    if (!x) return std::nullopt;
    out.col(c) = *x;
  }
  return out;
}

}  // namespace linalg
}  // namespace rootpoly
