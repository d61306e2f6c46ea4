#include "runforge/rational.hpp"

#include <cmath>

#include "runforge/errors.hpp"

namespace runforge {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_fraction_string(const ExactRational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_decimal(const ExactRational& x, int digits) {
  if (digits < 0) throw ArgumentError("digit count must be non-negative");
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  const bool negative = x < 0;
  const ExactRational magnitude = negative ? ExactRational(-x) : x;
  const BigInt num = numerator(magnitude) * scale;
  const BigInt den = denominator(magnitude);
  BigInt q = num / den;
  const BigInt twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && (q & 1) != 0)) ++q;

  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

double to_double(const ExactRational& x) { return x.convert_to<double>(); }

ExactRational from_double(double x) {
  if (!std::isfinite(x)) throw ArgumentError("non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // 53 significant bits fit exactly after scaling by 2^53.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  ExactRational r(scaled);
  exp -= 53;
  const BigInt two_pow = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(std::abs(exp)));
  if (exp >= 0) return r * two_pow;
  return r / two_pow;
}

}  // namespace runforge
