#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "oracle_geometry.hpp"
#include "rootpoly/oracle.hpp"

namespace rootpoly::oracle {

namespace detail {

namespace {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<Eigen::Index> rref(Matrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    const Rational lead = m(row, col);
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(row, c) /= lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Eigen::Index rank_of(Matrix m) { return static_cast<Eigen::Index>(rref(m).size()); }

std::int64_t to_int(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("oracle: expected an integer");
  return numerator(r).convert_to<std::int64_t>();
}

IntVector primitive(const std::vector<Rational>& v) {
  Integer scale = 1;
  for (const auto& x : v) scale = lcm(scale, Integer(denominator(x)));
  IntVector out;
  std::int64_t g = 0;
  for (const auto& x : v) {
    out.push_back(to_int(x * Rational(scale)));
    g = std::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace

std::vector<Edge> increasing_reach(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out_edges(n + 1);
  for (auto [i, j] : g.edges()) out_edges[i].push_back(j);
  std::set<Edge> pairs;
  for (int s = 1; s <= n; ++s) {
    std::vector<int> stack{s};
    std::vector<char> seen(n + 1, 0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : out_edges[v])
        if (!seen[w]) {
          seen[w] = 1;
          pairs.insert({s, w});
          stack.push_back(w);
        }
    }
  }
  return {pairs.begin(), pairs.end()};
}

bool has_cycle(int vertex_count, const std::vector<Edge>& edges) {
  std::vector<int> root(vertex_count + 1);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v];
    return v;
  };
  for (auto [i, j] : edges) {
    int a = find(i), b = find(j);
    if (a == b) return true;
    root[a] = b;
  }
  return false;
}

bool pair_crosses(Edge a, Edge b) {
  auto strictly_inside = [](int v, Edge e) { return e.i < v && v < e.j; };
  const bool ai = strictly_inside(a.i, b), aj = strictly_inside(a.j, b);
  const bool shared = a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
  return !shared && ai != aj;
}

Hull::Hull(int ambient, const std::vector<IntVector>& points) : ambient_(ambient) {
  // Basis of the span, chosen greedily.
  Matrix acc(0, ambient);
  for (const IntVector& p : points) {
    Matrix trial(acc.rows() + 1, ambient);
    trial.topRows(acc.rows()) = acc;
    for (int c = 0; c < ambient; ++c) trial(acc.rows(), c) = p[c];
    if (rank_of(trial) > acc.rows()) {
      acc = trial;
      basis_.push_back(p);
    }
  }
  dimension_ = static_cast<int>(basis_.size());
  if (dimension_ == 0) return;
  const int d = dimension_;

  // Coordinates on which the basis is invertible.
  Matrix picked(0, d);
  for (int r = 0; r < ambient && static_cast<int>(rows_.size()) < d; ++r) {
    Matrix trial(picked.rows() + 1, d);
    trial.topRows(picked.rows()) = picked;
    for (int c = 0; c < d; ++c) trial(picked.rows(), c) = basis_[c][r];
    if (rank_of(trial) > picked.rows()) {
      picked = trial;
      rows_.push_back(r);
    }
  }
  Matrix aug(d, 2 * d);
  aug.leftCols(d) = picked;
  aug.rightCols(d) = Matrix::Identity(d, d);
  Matrix lu = picked;
  Rational det = 1;
  for (int col = 0; col < d; ++col) {
    int p = col;
    while (lu(p, col) == 0) ++p;
    if (p != col) {
      lu.row(p).swap(lu.row(col));
      det = -det;
    }
    det *= lu(col, col);
    for (int r = col + 1; r < d; ++r) {
      const Rational f = lu(r, col) / lu(col, col);
      for (int c = col; c < d; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  det_ = to_int(det);
  rref(aug);
  adjugate_.assign(d, IntVector(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) adjugate_[r][c] = to_int(aug(r, d + c) * det);

  // Facets: hyperplanes through d affinely independent points with every
  // point on one side.
  std::vector<IntVector> coords;
  for (const IntVector& p : points) {
    IntVector c;
    if (!coordinates(p, c)) throw std::logic_error("oracle: point outside its own span");
    coords.push_back(std::move(c));
  }
  std::set<std::pair<IntVector, std::int64_t>> found;
  std::vector<int> pick(d);
  auto visit = [&](auto&& self, int next, int filled) -> void {
    if (filled == d) {
      Matrix diff(std::max(d - 1, 0), d);
      for (int k = 1; k < d; ++k)
        for (int c = 0; c < d; ++c) diff(k - 1, c) = coords[pick[k]][c] - coords[pick[0]][c];
      std::vector<Eigen::Index> pivots;
      if (d > 1) pivots = rref(diff);
      if (static_cast<int>(pivots.size()) != d - 1) return;
      Eigen::Index free = 0;
      while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
      std::vector<Rational> normal(d, Rational(0));
      normal[free] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k) normal[pivots[k]] = -diff(static_cast<Eigen::Index>(k), free);
      IntVector a = primitive(normal);
      std::int64_t b = 0;
      for (int c = 0; c < d; ++c) b += a[c] * coords[pick[0]][c];
      bool below = true, above = true;
      for (const IntVector& w : coords) {
        std::int64_t s = -b;
        for (int c = 0; c < d; ++c) s += a[c] * w[c];
        if (s > 0) below = false;
        if (s < 0) above = false;
      }
      if (below == above) return;  // splits the points, or all on the plane
      if (above) {
        for (auto& x : a) x = -x;
        b = -b;
      }
      found.insert({a, b});
      return;
    }
    for (int x = next; x < static_cast<int>(coords.size()); ++x) {
      pick[filled] = x;
      self(self, x + 1, filled + 1);
    }
  };
  visit(visit, 0, 0);
  for (const auto& [a, b] : found) facets_.push_back({a, b});
}

bool Hull::coordinates(const IntVector& x, IntVector& out) const {
  const int d = dimension_;
  out.assign(d, 0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out[r] += adjugate_[r][c] * x[rows_[c]];
  // x is in the span iff basis * out == det * x.
  for (int k = 0; k < ambient_; ++k) {
    std::int64_t s = 0;
    for (int c = 0; c < d; ++c) s += basis_[c][k] * out[c];
    if (s != det_ * x[k]) return false;
  }
  return true;
}

}  // namespace detail

namespace {

std::vector<detail::IntVector> hull_points(const Graph& g) {
  std::vector<detail::IntVector> points{detail::IntVector(g.vertex_count(), 0)};
  for (auto [i, j] : detail::increasing_reach(g)) {
    detail::IntVector v(g.vertex_count(), 0);
    v[i - 1] = 1;
    v[j - 1] = -1;
    points.push_back(std::move(v));
  }
  return points;
}

}  // namespace

LatticeCountResult lattice_count(const Graph& g, long t, int jobs) {
  if (t <= 0) throw std::invalid_argument("lattice_count: t must be positive");
  if (detail::has_cycle(g.vertex_count(), g.edges())) throw std::invalid_argument("lattice_count: graph has a cycle");
  const int n = g.vertex_count();
  const detail::Hull hull(n, hull_points(g));

  // A point of tP is a combination sum lambda_v v with sum lambda_v <= t of
  // vectors e_i - e_j, so every coordinate lies in [-t, t], the coordinates sum
  // to 0, and the absolute values sum to at most 2t.
  auto count_from = [&](long first, LatticeCountResult& out) {
    detail::IntVector x(n, 0), c;
    x[0] = first;
    auto fill = [&](auto&& self, int k, long sum, long l1) -> void {
      if (k == n - 1) {
        x[k] = -sum;
        if (x[k] < -t || x[k] > t || l1 + std::labs(x[k]) > 2 * t) return;
        if (!hull.coordinates(x, c)) return;
        bool inside = true, strict = true;
        for (const auto& f : hull.facets()) {
          std::int64_t s = 0;
          for (int r = 0; r < hull.dimension(); ++r) s += f.normal[r] * c[r];
          if (s > t * f.offset) inside = false;
          if (s >= t * f.offset) strict = false;
        }
        if (inside) out.closed += 1;
        if (inside && strict) out.interior += 1;
        return;
      }
      for (long v = -t; v <= t; ++v) {
        if (l1 + std::labs(v) > 2 * t) continue;
        x[k] = v;
        self(self, k + 1, sum + v, l1 + std::labs(v));
      }
    };
    if (n == 1) {
      if (first == 0) fill(fill, 0, 0, 0);
      return;
    }
    fill(fill, 1, first, std::labs(first));
  };

  std::vector<LatticeCountResult> parts(2 * t + 1);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(parts.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (long k = w; k < static_cast<long>(parts.size()); k += workers) count_from(k - t, parts[k]);
    });
  for (auto& th : pool) th.join();

  LatticeCountResult total{t, 0, 0};
  for (const auto& p : parts) {
    total.closed += p.closed;
    total.interior += p.interior;
  }
  return total;
}

}  // namespace rootpoly::oracle
