#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "runforge/runs.hpp"
#include "runforge/word.hpp"

namespace runforge {

enum class SearchMode { kMax, kMin };

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

/// Longest binary length accepted by tau_exhaustive (2^(n-1) words).
inline constexpr int kMaxBinarySearchLength = 32;
/// Largest alpha^n accepted for alphabets of three or more letters.
inline constexpr std::uint64_t kMaxGeneralSearchWords = 4'782'969;  // 3^14
/// Reported witness lists are complete up to this many classes.
inline constexpr std::size_t kMaxListedWitnesses = 64;

struct TauRecord {
  int n = 0;
  int alphabet_size = 2;
  SearchMode mode = SearchMode::kMax;
  std::size_t value = 0;
  /// Canonical extremal words, sorted. All classes when there are at most
  /// kMaxListedWitnesses of them, otherwise only the least.
  std::vector<Word> witnesses;
  std::size_t witness_classes = 0;
  std::uint64_t words_examined = 0;

  bool witnesses_complete() const noexcept { return witnesses.size() == witness_classes; }
};

/// Exact maximum (or minimum) TRL over all words of length n. Binary search
/// fixes the first letter; results do not depend on `jobs`.
TauRecord tau_exhaustive(int n, int alphabet_size, SearchMode mode, unsigned jobs = 1);

/// A position covered by too many runs of related periods.
struct CoverageViolation {
  Word word;
  std::size_t position = 0;  // 1-based
  /// p for the four-runs check (periods p and p+1); q for the pair check
  /// (periods 2q-1 and 2q).
  std::size_t period = 0;
  std::vector<Run> runs;     // all runs of the word
};

struct CoverageReport {
  int max_length = 0;
  int alphabet_size = 0;
  std::uint64_t words_checked = 0;
  std::vector<CoverageViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Largest sum of alpha^n over lengths 1..max_length accepted by the
/// verifiers.
inline constexpr std::uint64_t kMaxVerifierWords = 50'000'000;

/// No position lies in two runs of period p and two runs of period p+1.
CoverageReport verify_four_runs(int max_length, int alphabet_size);
std::vector<CoverageViolation> four_runs_violations(const Word& w);

/// No position lies in more than three runs with periods in {2q-1, 2q}.
CoverageReport verify_pair_coverage(int max_length, int alphabet_size);
std::vector<CoverageViolation> pair_coverage_violations(const Word& w);

/// Published maximum TRL values for binary words of length 1..22, with one
/// maximizing word per length.
struct KnownMaximizer {
  int n;
  std::size_t tau;
  std::string_view example;
};
std::span<const KnownMaximizer> known_binary_maximizers();

/// Calls fn(const std::vector<Symbol>&) for every word of `length` letters,
/// in lexicographic order.
template <typename Fn>
void for_each_word(std::size_t length, int alphabet_size, Fn&& fn) {
  std::vector<Symbol> w(length, 0);
  const auto top = static_cast<Symbol>(alphabet_size - 1);
  while (true) {
    fn(static_cast<const std::vector<Symbol>&>(w));
    std::size_t i = length;
    while (i > 0 && w[i - 1] == top) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace runforge
