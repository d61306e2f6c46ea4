#include "doctest.h"
#include "runforge/lemmas.hpp"

using namespace runforge;

TEST_CASE("overlap form checker") {
  // X = "b", x = 'a', p = 3, k = 1: b aa b aaa b a
  CHECK(has_overlap_form(parse_word("baabaaaba"), 3, 1));
  CHECK(has_overlapping_squares(parse_word("baabaaaba"), 3, 1));
  CHECK_FALSE(has_overlap_form(parse_word("baabaaabb"), 3, 1));
  // k = 0: x^p x^(p+1) x is a unary word.
  CHECK(has_overlap_form(parse_word("aaaaaaaa"), 3, 0));
  CHECK_FALSE(has_overlap_form(parse_word("aaaaaaa"), 3, 0));
  CHECK_FALSE(has_overlap_form(parse_word("baabaaaba"), 3, 4));
}

TEST_CASE("two-period lemma") {
  const auto ex = check_two_periods_exhaustive(12);
  CHECK(ex.ok());
  CHECK(ex.cases > 1000);
  const auto rnd = check_two_periods_random(10'000, 1);
  CHECK(rnd.ok());
  CHECK(rnd.cases == 10'000);
}

TEST_CASE("period-difference lemma") {
  const auto ex = check_period_difference_exhaustive(12);
  CHECK(ex.ok());
  CHECK(ex.cases > 1000);
  CHECK(check_period_difference_random(10'000, 2).ok());
}

TEST_CASE("overlap-glue lemma") {
  const auto ex = check_overlap_glue_exhaustive(10);
  CHECK(ex.ok());
  CHECK(ex.cases > 1000);
  CHECK(check_overlap_glue_random(10'000, 3).ok());
}

TEST_CASE("overlap-structure lemma") {
  const auto ex = check_overlap_structure_exhaustive(6);
  CHECK(ex.ok());
  // Binary: X ranges over 2^k blocks and x over 2 letters.
  std::size_t expected = 0;
  for (std::size_t p = 1; p <= 6; ++p) {
    for (std::size_t k = 0; k <= p; ++k) expected += std::size_t{2} << k;
  }
  CHECK(ex.cases == expected);
  CHECK(check_overlap_structure_random(10'000, 4).ok());
}
