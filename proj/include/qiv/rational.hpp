#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qiv/errors.hpp"

namespace qiv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r) {
    if (!is_integral(r)) throw domain_violation_error("not an integer: " + r.str());
    return numerator(r);
}

/// Factorial n! as an exact integer.
Integer factorial(unsigned long n);

/// Binomial coefficient binom(n, m) for any integer n (including negative)
/// and natural m, via the falling-factorial product n(n-1)...(n-m+1)/m!.
Integer binomial(const Integer& n, unsigned long m);

/// Deterministic trial-division primality test; fine at desk scale.
bool is_prime(unsigned long n);

/// Parse "3", "-7/2" style exact rationals.
Rational parse_rational(const std::string& text);

} // namespace qiv
