#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rootpoly/arith.hpp"
#include "rootpoly/monomial.hpp"

namespace rootpoly {

/// Finite sum of monomials with nonzero rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, AdmissibleLess>;

  explicit Polynomial(Mode mode = Mode::noncommutative) : mode_(mode) {}
  Polynomial(const Monomial& m, Rational coefficient = 1);

  Mode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  /// Largest monomial in the admissible order; throws on zero.
  const Monomial& leading() const;

  void add(const Monomial& m, const Rational& coefficient);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Mode mode_;
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& p, const Monomial& m);
Polynomial operator*(const Monomial& m, const Polynomial& p);

/// Coefficients of beta^0, beta^1, ... after setting every x_ij to 1.
std::vector<Rational> specialize_x_to_one(const Polynomial& p);

/// Terms in decreasing admissible order joined by + and -; the zero polynomial
/// renders as 0.
std::string format(const Polynomial& p);

/// Parses `[coeff] [b|b^k] letter letter ...`; letters are x<i><j> or x{i,j}.
Monomial parse_monomial(std::string_view text, Mode mode);
Polynomial parse_polynomial(std::string_view text, Mode mode);

void to_json(nlohmann::json& j, const Monomial& m);
void from_json(const nlohmann::json& j, Monomial& m);
void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

}  // namespace rootpoly
