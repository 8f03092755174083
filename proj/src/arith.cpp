#include "rootpoly/arith.hpp"

#include <stdexcept>

namespace rootpoly {

Integer binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  if (k < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long r = 1; r <= k; ++r) {
    result *= n - k + r;
    result /= r;
  }
  return result;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer result = 1;
  for (long r = 2; r <= n; ++r) result *= r;
  return result;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto valid_integer = [](std::string_view s) {
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos == s.size()) return false;
    for (; pos < s.size(); ++pos)
      if (s[pos] < '0' || s[pos] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw std::invalid_argument("invalid rational: " + std::string(text));
  const std::string num_str(num[0] == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(Integer(num_str));
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("invalid rational: " + std::string(text));
  const Integer d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(Integer(num_str), d);
}

}  // namespace rootpoly
