#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "runforge/extremal.hpp"
#include "runforge/word.hpp"

namespace runforge {

/// ((ab)^k a)^2, of length 4k+2. Throws ArgumentError for k < 1.
Word word_u(int k);

/// 2k^2 + 8k + 4, the TRL of word_u(k). Throws FormulaDomainError for k < 2:
/// at k = 1 the period-2 factors are too short to be runs and the true TRL
/// is 8.
std::int64_t trl_u_formula(int k);

/// The same quantity in terms of n = 4k+2: (n^2 + 12n + 4) / 8.
/// Requires n = 4k+2 with k >= 2.
std::int64_t trl_u_formula_by_length(std::int64_t n);

/// a b a^(n-4) b a. Throws ArgumentError for n < 6.
Word word_min_trl(int n);

/// Start point for local search: word_u(k) with k = max(1, (n-2)/4), cut or
/// cyclically extended to n letters.
Word baseline_word(int n);

/// 8 * tau_value > n^2.
bool lower_bound_holds(std::int64_t n, std::int64_t tau_value);

/// Largest n accepted by the bound evaluators (keeps 47n^2 in int64).
inline constexpr std::int64_t kMaxBoundLength = 100'000'000;

/// (ceil(n/4) - floor(n/6)) (n - 3 + 2(ceil(n/4) + floor(n/6) + 1))
///   + 3n floor(n/6)
std::int64_t upper_bound_expr(std::int64_t n);

/// 72 * value < 47n^2 + 144n, i.e. value < 47n^2/72 + 2n.
bool below_upper_bound(std::int64_t n, std::int64_t value);

struct BoundFailure {
  std::int64_t n;
  std::int64_t lhs;
  std::int64_t rhs;
};

struct BoundCheckReport {
  std::int64_t n_min = 1;
  std::int64_t n_max = 0;
  std::vector<BoundFailure> failures;

  bool all_ok() const noexcept { return failures.empty(); }
};

/// 72 * upper_bound_expr(n) < 47n^2 + 144n for 1 <= n <= n_max, and every
/// known tau value up to n_max satisfies the same strict bound.
BoundCheckReport check_upper_bound(std::int64_t n_max);

/// 8 * tau > n^2 for each (n, tau) with n >= 2; failures carry (n, 8 tau, n^2).
BoundCheckReport check_lower_bound(std::span<const KnownMaximizer> known);

}  // namespace runforge
