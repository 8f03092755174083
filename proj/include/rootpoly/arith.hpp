#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace rootpoly {

// Expression templates are off so the types behave as plain values inside
// Eigen matrices and std containers.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

Integer factorial(long n);

/// `p` when the denominator is 1, `p/q` otherwise.
std::string to_string(const Rational& value);

/// Accepts `p` or `p/q` with an optional leading sign.
Rational parse_rational(std::string_view text);

}  // namespace rootpoly
