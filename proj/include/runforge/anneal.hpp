#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "runforge/rational.hpp"
#include "runforge/word.hpp"

namespace runforge {

struct AnnealConfig {
  int n = 0;
  std::uint64_t seed = 42;
  std::uint64_t iterations = 100'000;
  int restarts = 20;
  double initial_temperature = 2.0;
  double cooling_factor = 0.9999;
  unsigned jobs = 1;
};

struct SearchResult {
  Word best_word;
  std::size_t best_trl = 0;
  ExactRational ratio{0};  // best_trl / n^2
  Word baseline;
  std::size_t baseline_trl = 0;
  std::vector<std::size_t> history;  // best TRL per restart
};

/// Simulated annealing over binary words of length n, maximizing TRL with
/// single-letter flips and geometric cooling. Restart r draws from
/// SplitMix64(seed + r); restart 0 starts at baseline_word(n), the others at
/// random words. Identical configs give identical results for any `jobs`.
SearchResult anneal_max_trl(const AnnealConfig& config);

}  // namespace runforge
