#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "runforge/rational.hpp"

namespace runforge {

/// Moebius function. Throws ArgumentError for m < 1.
int mobius(std::int64_t m);

/// Number of primitive words of length p over alpha letters:
/// sum over d | p of alpha^d * mobius(p / d).
BigInt primitive_count(int p, int alpha);

/// primitive_count(p, alpha) for p = 0..max_p (index 0 holds 0).
std::vector<BigInt> primitive_counts(int max_p, int alpha);

/// Expected TRL of a uniformly random word of length n over alpha letters,
/// split into interior runs (s1), runs touching exactly one end (s2) and
/// runs spanning the whole word (s3).
struct ExpectationReport {
  int n = 0;
  int alpha = 0;
  ExactRational s1{0};
  ExactRational s2{0};
  ExactRational s3{0};
  ExactRational total{0};
};

ExpectationReport expected_trl_exact(int n, int alpha);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Average TRL over all alpha^n words, by enumeration. Throws CapacityError
/// when alpha^n exceeds `budget`.
ExactRational expected_trl_oracle(int n, int alpha,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Truncated positive series with a proven bound on the omitted tail.
struct SeriesValue {
  ExactRational partial_sum{0};
  ExactRational tail_bound{0};
  int terms = 0;
};

/// Limit of expected TRL / n: sum over p >= 1 of
/// P(p) (2p(alpha-1) + 1) / alpha^(2p+1), truncated once the tail majorant
/// obtained from P(p) <= alpha^p falls below `tolerance`.
SeriesValue trl_density(int alpha, double tolerance);

/// Limit of s2 as n grows: (2 / (alpha-1)) sum over p >= 1 of
/// P(p) (2p(alpha-1) + 1) / alpha^(2p). Term by term this is
/// 2 alpha / (alpha-1) times the density series.
SeriesValue s2_limit(int alpha, double tolerance);

/// Reruns `series` with a tenfold smaller tolerance until both ends of
/// [partial_sum, partial_sum + tail_bound] round to the same `digits`
/// decimals, so the printed digits are certified. Gives up below 1e-30.
SeriesValue settle_digits(const std::function<SeriesValue(double)>& series, double tolerance,
                          int digits);

}  // namespace runforge
