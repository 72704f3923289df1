#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace aklt {

// Exact scalar field for the closed-form pipeline. Stored in lowest terms
// with positive denominator; floating point enters only at logarithms.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial_big(unsigned n);

// base^n by repeated squaring, n >= 0
Rational rational_pow(const Rational& base, unsigned long n);

// Largest integer <= q.
BigInt floor_rational(const Rational& q);

// Nearest-double conversion that stays accurate for ratios of huge integers
// (the naive num/den route overflows long before the quotient does).
double to_double(const Rational& q);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace aklt
