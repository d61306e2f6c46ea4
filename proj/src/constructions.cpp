#include "runforge/constructions.hpp"

#include <string>

#include "runforge/errors.hpp"

namespace runforge {

namespace {

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void require_bound_length(std::int64_t n) {
  if (n < 1 || n > kMaxBoundLength) {
    throw ArgumentError("n must be in 1.." + std::to_string(kMaxBoundLength) + ", got " +
                        std::to_string(n));
  }
}

}  // namespace

Word word_u(int k) {
  if (k < 1) throw ArgumentError("u(k) needs k >= 1, got " + std::to_string(k));
  std::vector<Symbol> half;
  for (int i = 0; i < k; ++i) {
    half.push_back(0);
    half.push_back(1);
  }
  half.push_back(0);
  std::vector<Symbol> w = half;
  w.insert(w.end(), half.begin(), half.end());
  return Word(std::move(w), Alphabet(2));
}

std::int64_t trl_u_formula(int k) {
  if (k < 2) {
    throw FormulaDomainError("TRL(u(k)) = 2k^2+8k+4 holds for k >= 2 only; got k = " +
                             std::to_string(k));
  }
  const std::int64_t kk = k;
  return 2 * kk * kk + 8 * kk + 4;
}

std::int64_t trl_u_formula_by_length(std::int64_t n) {
  if (n < 10 || (n - 2) % 4 != 0) {
    throw FormulaDomainError("length must be 4k+2 with k >= 2, got " + std::to_string(n));
  }
  return (n * n + 12 * n + 4) / 8;
}

Word word_min_trl(int n) {
  if (n < 6) throw ArgumentError("a b a^(n-4) b a needs n >= 6, got " + std::to_string(n));
  std::vector<Symbol> w(static_cast<std::size_t>(n), 0);
  w[1] = 1;
  w[static_cast<std::size_t>(n) - 2] = 1;
  return Word(std::move(w), Alphabet(2));
}

Word baseline_word(int n) {
  if (n < 1) throw ArgumentError("length must be positive");
  const Word u = word_u(std::max(1, (n - 2) / 4));
  std::vector<Symbol> w(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u[i % u.size()];
  return Word(std::move(w), Alphabet(2));
}

bool lower_bound_holds(std::int64_t n, std::int64_t tau_value) {
  return 8 * tau_value > n * n;
}

std::int64_t upper_bound_expr(std::int64_t n) {
  require_bound_length(n);
  const std::int64_t c4 = ceil_div(n, 4);
  const std::int64_t f6 = n / 6;
  return (c4 - f6) * (n - 3 + 2 * (c4 + f6 + 1)) + 3 * n * f6;
}

bool below_upper_bound(std::int64_t n, std::int64_t value) {
  return 72 * value < 47 * n * n + 144 * n;
}

BoundCheckReport check_upper_bound(std::int64_t n_max) {
  require_bound_length(n_max);
  BoundCheckReport report{1, n_max, {}};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t value = upper_bound_expr(n);
    if (!below_upper_bound(n, value)) {
      report.failures.push_back({n, 72 * value, 47 * n * n + 144 * n});
    }
  }
  for (const KnownMaximizer& m : known_binary_maximizers()) {
    if (m.n > n_max) break;
    const auto tau = static_cast<std::int64_t>(m.tau);
    if (!below_upper_bound(m.n, tau)) {
      report.failures.push_back({m.n, 72 * tau, 47 * m.n * m.n + 144 * m.n});
    }
  }
  return report;
}

BoundCheckReport check_lower_bound(std::span<const KnownMaximizer> known) {
  BoundCheckReport report{2, 1, {}};
  for (const KnownMaximizer& m : known) {
    if (m.n < 2) continue;
    report.n_max = std::max<std::int64_t>(report.n_max, m.n);
    const auto tau = static_cast<std::int64_t>(m.tau);
    if (!lower_bound_holds(m.n, tau)) {
      report.failures.push_back({m.n, 8 * tau, std::int64_t{m.n} * m.n});
    }
  }
  return report;
}

}  // namespace runforge
