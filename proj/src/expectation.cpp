#include "runforge/expectation.hpp"

#include <string>

#include "runforge/errors.hpp"
#include "runforge/runs.hpp"
#include "runforge/extremal.hpp"

namespace runforge {

namespace {

BigInt power(int base, int exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

void require_alpha(int alpha, int minimum) {
  if (alpha < minimum) {
    throw ArgumentError("alphabet size must be at least " + std::to_string(minimum) +
                        ", got " + std::to_string(alpha));
  }
}

// Sum over p > terms of (2p(alpha-1) + 1) / alpha^(p+1), in closed form.
ExactRational density_tail(int alpha, int terms) {
  const ExactRational r(1, alpha);
  const ExactRational one_minus_r = 1 - r;
  const ExactRational r_pow = ExactRational(1, power(alpha, terms + 1));
  const ExactRational weighted = r_pow * ((terms + 1) - terms * r) / (one_minus_r * one_minus_r);
  const ExactRational plain = r_pow / one_minus_r;
  return r * (2 * (alpha - 1) * weighted + plain);
}

template <typename Term>
SeriesValue sum_series(int alpha, double tolerance, const ExactRational& tail_scale, Term&& term) {
  require_alpha(alpha, 2);
  if (!(tolerance > 0)) throw ArgumentError("tolerance must be positive");
  const ExactRational tol = from_double(tolerance);
  SeriesValue out;
  while (true) {
    out.tail_bound = tail_scale * density_tail(alpha, out.terms);
    if (out.tail_bound < tol) return out;
    ++out.terms;
    out.partial_sum += term(out.terms);
  }
}

}  // namespace

int mobius(std::int64_t m) {
  if (m < 1) throw ArgumentError("mobius needs m >= 1, got " + std::to_string(m));
  int sign = 1;
  for (std::int64_t f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    m /= f;
    if (m % f == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

BigInt primitive_count(int p, int alpha) {
  if (p < 1) throw ArgumentError("length must be at least 1");
  require_alpha(alpha, 1);
  BigInt sum = 0;
  for (int d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    const int mu = mobius(p / d);
    if (mu != 0) sum += mu * power(alpha, d);
  }
  return sum;
}

std::vector<BigInt> primitive_counts(int max_p, int alpha) {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(0, max_p)) + 1, BigInt(0));
  for (int p = 1; p <= max_p; ++p) out[static_cast<std::size_t>(p)] = primitive_count(p, alpha);
  return out;
}

ExpectationReport expected_trl_exact(int n, int alpha) {
  if (n < 1) throw ArgumentError("length must be at least 1");
  require_alpha(alpha, 2);
  ExpectationReport report{n, alpha};
  const auto P = primitive_counts(n / 2, alpha);
  const auto at = [&](int p) -> const BigInt& { return P[static_cast<std::size_t>(p)]; };

  // Every term is scaled by alpha^n, which makes it an integer.
  // cum[m] = sum over k = 1..m of k alpha^(n-2-k), for m <= n-2.
  std::vector<BigInt> cum(static_cast<std::size_t>(std::max(n - 1, 1)), BigInt(0));
  for (int k = 1; k <= n - 2; ++k) {
    cum[static_cast<std::size_t>(k)] = cum[static_cast<std::size_t>(k - 1)] + k * power(alpha, n - 2 - k);
  }
  BigInt s1 = 0;
  for (int p = 1; p <= (n - 2) / 2; ++p) {
    BigInt inner = 0;
    for (int i = 1; i <= n - 2 * p - 1; ++i) {
      inner += cum[static_cast<std::size_t>(n - i - 1)] - cum[static_cast<std::size_t>(2 * p - 1)];
    }
    s1 += at(p) * inner;
  }
  s1 *= BigInt((alpha - 1) * (alpha - 1));

  BigInt s2 = 0;
  for (int p = 1; p <= (n - 1) / 2; ++p) {
    BigInt inner = 0;
    for (int k = 2 * p; k <= n - 1; ++k) inner += k * power(alpha, n - 1 - k);
    s2 += at(p) * inner;
  }
  s2 *= BigInt(2 * (alpha - 1));

  BigInt s3 = 0;
  for (int p = 1; p <= n / 2; ++p) s3 += at(p);
  s3 *= n;

  const BigInt words = power(alpha, n);
  report.s1 = ExactRational(s1, words);
  report.s2 = ExactRational(s2, words);
  report.s3 = ExactRational(s3, words);
  report.total = report.s1 + report.s2 + report.s3;
  return report;
}

ExactRational expected_trl_oracle(int n, int alpha, std::uint64_t budget) {
  if (n < 1) throw ArgumentError("length must be at least 1");
  require_alpha(alpha, 2);
  std::uint64_t words = 1;
  for (int i = 0; i < n; ++i) {
    words *= static_cast<std::uint64_t>(alpha);
    if (words > budget) {
      throw CapacityError("enumerating " + std::to_string(alpha) + "^" + std::to_string(n) +
                          " words exceeds the budget of " + std::to_string(budget));
    }
  }
  BigInt sum = 0;
  if (alpha == 2 && n <= PackedBinary::kMaxLength) {
    std::uint64_t acc = 0;
    for (std::uint64_t bits = 0; bits < words; ++bits) acc += total_run_length(PackedBinary{bits, n});
    sum = acc;
  } else {
    std::uint64_t acc = 0;
    for_each_word(static_cast<std::size_t>(n), alpha, [&](const std::vector<Symbol>& w) {
      acc += total_run_length(std::span<const Symbol>(w));
    });
    sum = acc;
  }
  return ExactRational(sum, BigInt(words));
}

SeriesValue trl_density(int alpha, double tolerance) {
  return sum_series(alpha, tolerance, ExactRational(1), [alpha](int p) {
    return ExactRational(primitive_count(p, alpha) * (2 * p * (alpha - 1) + 1), power(alpha, 2 * p + 1));
  });
}

SeriesValue s2_limit(int alpha, double tolerance) {
  require_alpha(alpha, 2);
  return sum_series(alpha, tolerance, ExactRational(2 * alpha, alpha - 1), [alpha](int p) {
    return ExactRational(2 * primitive_count(p, alpha) * (2 * p * (alpha - 1) + 1),
                         (alpha - 1) * power(alpha, 2 * p));
  });
}

SeriesValue settle_digits(const std::function<SeriesValue(double)>& series, double tolerance,
                          int digits) {
  SeriesValue v = series(tolerance);
  while (to_decimal(v.partial_sum, digits) != to_decimal(v.partial_sum + v.tail_bound, digits) &&
         tolerance > 1e-30) {
    tolerance /= 10;
    v = series(tolerance);
  }
  return v;
}

}  // namespace runforge
