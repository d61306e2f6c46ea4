#include "doctest.h"
#include "runforge/constructions.hpp"
#include "runforge/errors.hpp"
#include "runforge/runs.hpp"

using namespace runforge;

TEST_CASE("word_u") {
  CHECK(word_u(1).str() == "abaaba");
  CHECK(word_u(2).str() == "ababaababa");
  CHECK(word_u(2).size() == 10);
  CHECK(word_u(3).str() == "abababaabababa");
  CHECK_THROWS_AS(word_u(0), ArgumentError);
}

TEST_CASE("trl_u_formula against the run oracle") {
  for (int k = 2; k <= 6; ++k) {
    std::size_t trl = 0;
    for (const Run& r : find_runs_oracle(word_u(k))) trl += r.length;
    CHECK(static_cast<std::int64_t>(trl) == trl_u_formula(k));
  }
  CHECK(trl_u_formula(2) == 28);
  CHECK(trl_u_formula(3) == 46);
  CHECK(trl_u_formula(10) == 284);
  CHECK(static_cast<std::int64_t>(total_run_length(word_u(10))) == 284);
}

TEST_CASE("trl_u_formula outside its domain") {
  CHECK_THROWS_AS(trl_u_formula(1), FormulaDomainError);
  CHECK_THROWS_AS(trl_u_formula(0), FormulaDomainError);
  // The square (aba)^2 plus the central "aa".
  CHECK(total_run_length(word_u(1)) == 8);
}

TEST_CASE("closed form in terms of the length") {
  for (int k = 2; k <= 50; ++k) {
    const std::int64_t n = 4 * k + 2;
    CHECK(trl_u_formula_by_length(n) == trl_u_formula(k));
    // The alternative (n^2 + 4n + 12) / 8 undercounts by n - 1.
    CHECK((n * n + 4 * n + 12) / 8 != trl_u_formula(k));
  }
  CHECK_THROWS_AS(trl_u_formula_by_length(6), FormulaDomainError);
  CHECK_THROWS_AS(trl_u_formula_by_length(12), FormulaDomainError);
}

TEST_CASE("TRL(u(k)) for k up to 50 and the constructive lower bound") {
  for (int k = 2; k <= 50; ++k) {
    const auto trl = static_cast<std::int64_t>(total_run_length(word_u(k)));
    REQUIRE(trl == trl_u_formula(k));
    REQUIRE(lower_bound_holds(4 * k + 2, trl));
  }
}

TEST_CASE("word_min_trl") {
  CHECK(word_min_trl(6).str() == "abaaba");
  CHECK(word_min_trl(7).str() == "abaaaba");
  CHECK(word_min_trl(10).str() == "abaaaaaaba");
  CHECK(total_run_length(word_min_trl(10)) == 6);
  CHECK(total_run_length(word_min_trl(7)) == 3);
  CHECK_THROWS_AS(word_min_trl(5), ArgumentError);
  // At n = 6 the word is the square (aba)^2.
  CHECK(total_run_length(word_min_trl(6)) == 8);
  for (int n = 7; n <= 500; ++n) {
    REQUIRE(total_run_length(word_min_trl(n)) == static_cast<std::size_t>(n - 4));
  }
}

TEST_CASE("baseline_word") {
  CHECK(baseline_word(10) == word_u(2));
  CHECK(baseline_word(11).str() == "ababaababaa");
  CHECK(baseline_word(3).str() == "aba");
  CHECK(baseline_word(50) == word_u(12));
  // Appending letters never lowers TRL, so the floor carries over.
  for (int n = 6; n <= 80; ++n) {
    const int k = std::max(1, (n - 2) / 4);
    CHECK(total_run_length(baseline_word(n)) >= total_run_length(word_u(k)));
  }
}

TEST_CASE("lower bound comparisons") {
  CHECK(lower_bound_holds(10, 29));
  CHECK(lower_bound_holds(2, 2));
  CHECK(lower_bound_holds(22, 99));
  CHECK_FALSE(lower_bound_holds(8, 8));
  CHECK(check_lower_bound(known_binary_maximizers()).all_ok());
  const KnownMaximizer bad[] = {{8, 8, "aaaaaaaa"}};
  const auto report = check_lower_bound(bad);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].lhs == 64);
  CHECK(report.failures[0].rhs == 64);
}

TEST_CASE("upper bound expression") {
  CHECK(upper_bound_expr(12) == 93);
  CHECK(upper_bound_expr(1) == 2);
  CHECK(upper_bound_expr(24) == 374);
  CHECK(72 * upper_bound_expr(12) == 6696);
  CHECK(below_upper_bound(12, 93));
  CHECK(below_upper_bound(22, 99));
  CHECK_FALSE(below_upper_bound(1, 3));
  CHECK_THROWS_AS(upper_bound_expr(0), ArgumentError);
}

TEST_CASE("upper bound check") {
  const auto report = check_upper_bound(100'000);
  CHECK(report.all_ok());
  CHECK(report.n_max == 100'000);
}
