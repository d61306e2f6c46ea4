#include "runforge/runs.hpp"

#include <algorithm>
#include <array>

namespace runforge {

namespace {

constexpr int kMaxPackedPeriod = PackedBinary::kMaxLength / 2;

constexpr std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

struct ProperDivisors {
  std::array<std::array<std::uint8_t, 8>, kMaxPackedPeriod + 1> list{};
  std::array<std::uint8_t, kMaxPackedPeriod + 1> count{};

  constexpr ProperDivisors() {
    for (int p = 1; p <= kMaxPackedPeriod; ++p) {
      for (int d = 1; d < p; ++d) {
        if (p % d == 0) list[p][count[p]++] = static_cast<std::uint8_t>(d);
      }
    }
  }
};

constexpr ProperDivisors kDivisors{};

// Generator g holds p letters; it is primitive iff no proper divisor of p is
// a period of it.
bool packed_primitive(std::uint64_t g, int p) {
  for (int j = 0; j < kDivisors.count[p]; ++j) {
    const int d = kDivisors.list[p][j];
    if (((g ^ (g >> d)) & low_mask(p - d)) == 0) return false;
  }
  return true;
}

// Calls emit(start0, length, period) for each run of the packed word.
template <typename Emit>
void scan_packed(PackedBinary w, Emit&& emit) {
  const int n = w.length;
  for (int p = 1; 2 * p <= n; ++p) {
    // Bit b set iff the letters at bits b and b + p agree.
    std::uint64_t eq = ~(w.bits ^ (w.bits >> p)) & low_mask(n - p);
    while (eq != 0) {
      const int lo = __builtin_ctzll(eq);
      const int block = __builtin_ctzll(~(eq >> lo));
      eq &= eq + (eq & (~eq + 1));
      if (block < p) continue;
      const int hi = lo + block - 1;
      const int start0 = n - 1 - hi - p;
      const std::uint64_t generator = (w.bits >> (n - start0 - p)) & low_mask(p);
      if (packed_primitive(generator, p)) emit(start0, block + p, p);
    }
  }
}

template <typename Emit>
void scan_generic(std::span<const Symbol> w, Emit&& emit) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t i = 0;
    while (i + p < n) {
      if (w[i] != w[i + p]) {
        ++i;
        continue;
      }
      const std::size_t begin = i;
      while (i + p < n && w[i] == w[i + p]) ++i;
      const std::size_t block = i - begin;
      if (block >= p && is_primitive(w.subspan(begin, p))) {
        emit(begin, block + p, p);
      }
    }
  }
}

bool use_packed(const Word& w) {
  return w.alphabet().size() <= 2 &&
         w.size() <= static_cast<std::size_t>(PackedBinary::kMaxLength);
}

}  // namespace

std::vector<Run> find_runs_oracle(const Word& w) {
  const auto s = w.symbols();
  const std::size_t n = s.size();
  std::vector<Run> runs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t len = j - i + 1;
      const auto fac = s.subspan(i, len);
      std::size_t p = 0;
      for (std::size_t q = 1; 2 * q <= len; ++q) {
        if (has_period(fac, q)) {
          p = q;
          break;
        }
      }
      if (p == 0) continue;
      const bool left_maximal = i == 0 || s[i - 1] != s[i - 1 + p];
      const bool right_maximal = j + 1 == n || s[j + 1] != s[j + 1 - p];
      if (left_maximal && right_maximal) runs.push_back({i + 1, len, p});
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::vector<Run> find_runs_fast(PackedBinary w) {
  std::vector<Run> runs;
  scan_packed(w, [&](int start0, int len, int p) {
    runs.push_back({static_cast<std::size_t>(start0) + 1,
                    static_cast<std::size_t>(len), static_cast<std::size_t>(p)});
  });
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::vector<Run> find_runs_fast(const Word& w) {
  if (use_packed(w)) return find_runs_fast(pack_binary(w));
  std::vector<Run> runs;
  scan_generic(w.symbols(), [&](std::size_t start0, std::size_t len, std::size_t p) {
    runs.push_back({start0 + 1, len, p});
  });
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::size_t total_run_length(PackedBinary w) {
  std::size_t trl = 0;
  scan_packed(w, [&](int, int len, int) { trl += static_cast<std::size_t>(len); });
  return trl;
}

std::size_t total_run_length(std::span<const Symbol> w) {
  std::size_t trl = 0;
  scan_generic(w, [&](std::size_t, std::size_t len, std::size_t) { trl += len; });
  return trl;
}

std::size_t total_run_length(const Word& w) {
  if (use_packed(w)) return total_run_length(pack_binary(w));
  return total_run_length(w.symbols());
}

RunStats run_stats(const std::vector<Run>& runs) {
  RunStats stats;
  for (const Run& r : runs) {
    stats.trl += r.length;
    stats.exponent_sum += ExactRational(static_cast<unsigned long long>(r.length),
                                        static_cast<unsigned long long>(r.period));
  }
  stats.run_count = runs.size();
  return stats;
}

RunStats run_stats(const Word& w) { return run_stats(find_runs_fast(w)); }

std::vector<std::vector<Run>> coverage(std::size_t word_length,
                                       const std::vector<Run>& runs) {
  std::vector<std::vector<Run>> out(word_length);
  for (const Run& r : runs) {
    for (std::size_t i = r.start; i <= r.last() && i <= word_length; ++i) {
      out[i - 1].push_back(r);
    }
  }
  return out;
}

std::vector<std::vector<Run>> coverage(const Word& w) {
  return coverage(w.size(), find_runs_fast(w));
}

std::vector<Run> mirror_runs(const std::vector<Run>& runs, std::size_t word_length) {
  std::vector<Run> out;
  out.reserve(runs.size());
  for (const Run& r : runs) {
    out.push_back({word_length - r.last() + 1, r.length, r.period});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace runforge
