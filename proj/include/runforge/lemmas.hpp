#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "runforge/word.hpp"

namespace runforge {

/// True iff |w| = 2p+k+2 and w = X x^(p-k) X x^(p-k+1) X x for a letter x
/// and |X| = k.
bool has_overlap_form(const Word& w, std::size_t p, std::size_t k);

/// True iff |w| = 2p+k+2, w[1..2p] has period p and w[k+1..k+2p+2] has
/// period p+1 (0 <= k <= p).
bool has_overlapping_squares(const Word& w, std::size_t p, std::size_t k);

/// Outcome of one lemma check. `cases` counts instances where the hypothesis
/// held, so the conclusion was actually exercised.
struct LemmaReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few counterexamples

  bool ok() const noexcept { return violations == 0; }
};

// Two periods p, q with |w| >= p + q - gcd(p, q) force period gcd(p, q).
LemmaReport check_two_periods_exhaustive(std::size_t max_length);
LemmaReport check_two_periods_random(std::size_t count, std::uint64_t seed);

// Periods q < p <= |w|: prefix and suffix of length |w| - q have period p - q.
LemmaReport check_period_difference_exhaustive(std::size_t max_length);
LemmaReport check_period_difference_random(std::size_t count, std::uint64_t seed);

// ab and bc with period p, |b| >= p: abc has period p.
LemmaReport check_overlap_glue_exhaustive(std::size_t max_length);
LemmaReport check_overlap_glue_random(std::size_t count, std::uint64_t seed);

// Squares of periods p and p+1 overlapping as in has_overlapping_squares
// force has_overlap_form; also checks the converse.
LemmaReport check_overlap_structure_exhaustive(std::size_t max_period);
LemmaReport check_overlap_structure_random(std::size_t count, std::uint64_t seed);

/// All of the above at the default scales: binary words up to 12 letters,
/// periods up to 6 for the structure lemma, `random_cases` each.
std::vector<LemmaReport> run_lemma_suites(std::size_t random_cases, std::uint64_t seed);

}  // namespace runforge
