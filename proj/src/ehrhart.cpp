#include <stdexcept>

#include "rootpoly/polytope.hpp"

namespace rootpoly {

namespace {

using Poly = std::vector<Rational>;  // coefficient of t^d at index d

Poly multiply_linear(const Poly& p, const Rational& slope, const Rational& offset) {
  Poly out(p.size() + 1, Rational(0));
  for (std::size_t d = 0; d < p.size(); ++d) {
    out[d] += p[d] * offset;
    out[d + 1] += p[d] * slope;
  }
  return out;
}

void accumulate(Poly& into, const Poly& p, const Rational& scale) {
  if (into.size() < p.size()) into.resize(p.size(), Rational(0));
  for (std::size_t d = 0; d < p.size(); ++d) into[d] += scale * p[d];
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
}

}  // namespace

std::vector<Rational> binomial_to_monomial(const std::vector<Rational>& binomial) {
  Poly out{Rational(0)};
  Poly basis{Rational(1)};  // C(t+i, i)
  for (std::size_t i = 0; i < binomial.size(); ++i) {
    if (i > 0) {
      basis = multiply_linear(basis, Rational(1), Rational(static_cast<long>(i)));
      for (auto& c : basis) c /= static_cast<long>(i);
    }
    accumulate(out, basis, binomial[i]);
  }
  trim(out);
  return out;
}

Rational EhrhartPolynomial::evaluate(const Rational& t) const {
  Rational value = 0;
  for (auto it = monomial.rbegin(); it != monomial.rend(); ++it) value = value * t + *it;
  return value;
}

int EhrhartPolynomial::degree() const {
  for (int d = static_cast<int>(monomial.size()) - 1; d >= 0; --d)
    if (monomial[d] != 0) return d;
  return -1;
}

std::string EhrhartPolynomial::format() const {
  std::string out = "L(t) = ";
  bool first = true;
  for (int d = static_cast<int>(monomial.size()) - 1; d >= 0; --d) {
    const Rational& c = monomial[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    const std::string power = d == 0 ? "" : d == 1 ? "t" : "t^" + std::to_string(d);
    if (power.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += power;
    else
      out += to_string(magnitude) + " " + power;
  }
  if (first) out += "0";
  return out;
}

EhrhartPolynomial ehrhart(const Graph& forest) {
  const FVector f = f_vector(forest);
  const std::size_t l = forest.edge_count();
  EhrhartPolynomial L;
  for (std::size_t i = 0; i <= l; ++i) {
    Rational a(f.at(i));
    if ((l + i) % 2) a = -a;
    L.binomial.push_back(a);
  }
  L.monomial = binomial_to_monomial(L.binomial);
  return L;
}

EhrhartPolynomial ehrhart_closed_A(int n) {
  if (n < 1) throw std::invalid_argument("ehrhart_closed_A: n must be positive");
  EhrhartPolynomial L;
  L.binomial.assign(n + 1, Rational(0));
  Poly expanded{Rational(0)};
  for (int i = 1; i <= n; ++i) {
    const Rational weight = Rational(binomial(n + i, n) * binomial(n - 1, i - 1)) / (n + 1);
    // Monomial side: C(-t-1, i) expanded as a product of (-t-1-r)/(r+1).
    Poly falling{Rational(1)};
    for (int r = 0; r < i; ++r) {
      falling = multiply_linear(falling, Rational(-1), Rational(-1 - r));
      for (auto& c : falling) c /= r + 1;
    }
    accumulate(expanded, falling, n % 2 ? Rational(-weight) : weight);
    // Binomial side: C(-t-1, i) = (-1)^i C(t+i, i).
    L.binomial[i] = (n + i) % 2 ? Rational(-weight) : weight;
  }
  trim(expanded);
  L.monomial = std::move(expanded);
  return L;
}

}  // namespace rootpoly
