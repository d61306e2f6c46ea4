#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace runforge {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
using ExactRational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const ExactRational& x);

/// Fixed-point rendering with `digits` places after the point, rounding
/// half to even.
std::string to_decimal(const ExactRational& x, int digits);

/// Nearest double; only for display and loose comparisons.
double to_double(const ExactRational& x);

/// Exact value of a finite double.
ExactRational from_double(double x);

}  // namespace runforge
