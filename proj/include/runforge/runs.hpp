#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "runforge/rational.hpp"
#include "runforge/word.hpp"

namespace runforge {

/// A maximal periodicity: the factor of `length` letters at 1-based `start`,
/// with minimal period `period` and length >= 2 * period.
struct Run {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 0;

  std::size_t last() const noexcept { return start + length - 1; }
  bool covers(std::size_t position) const noexcept {
    return start <= position && position <= last();
  }

  friend bool operator==(const Run&, const Run&) = default;
  // Output order: by start, then period.
  friend std::strong_ordering operator<=>(const Run& a, const Run& b) {
    if (auto c = a.start <=> b.start; c != 0) return c;
    if (auto c = a.period <=> b.period; c != 0) return c;
    return a.length <=> b.length;
  }
};

struct RunStats {
  std::size_t trl = 0;
  std::size_t run_count = 0;
  ExactRational exponent_sum{0};
};

/// Direct transcription of the definition: every factor is tested for a
/// period of at most half its length and for maximality on both sides.
/// Cubic-ish in |w|; ground truth for short words.
std::vector<Run> find_runs_oracle(const Word& w);

/// Match-block scan per candidate period. Binary words up to 64 letters take
/// the bit-parallel path. Output sorted by (start, period).
std::vector<Run> find_runs_fast(const Word& w);
std::vector<Run> find_runs_fast(PackedBinary w);

/// TRL without materializing the run list.
std::size_t total_run_length(const Word& w);
std::size_t total_run_length(std::span<const Symbol> w);
std::size_t total_run_length(PackedBinary w);

RunStats run_stats(const Word& w);
RunStats run_stats(const std::vector<Run>& runs);

/// For every 1-based position i (index i-1), the runs whose extent holds i.
std::vector<std::vector<Run>> coverage(const Word& w);
std::vector<std::vector<Run>> coverage(std::size_t word_length,
                                       const std::vector<Run>& runs);

/// Runs of reverse(w), given the runs of w and |w|.
std::vector<Run> mirror_runs(const std::vector<Run>& runs,
                             std::size_t word_length);

}  // namespace runforge
