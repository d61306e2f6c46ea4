#include "runforge/lemmas.hpp"

#include <numeric>

#include "runforge/random.hpp"

namespace runforge {

namespace {

constexpr std::size_t kMaxExamples = 5;

std::vector<Symbol> binary_word(std::uint64_t bits, std::size_t length) {
  std::vector<Symbol> w(length);
  for (std::size_t i = 0; i < length; ++i) {
    w[i] = static_cast<Symbol>((bits >> (length - 1 - i)) & 1U);
  }
  return w;
}

std::string render(std::span<const Symbol> w) {
  std::string s;
  for (Symbol c : w) s.push_back(Alphabet::letter(c));
  return s;
}

void record(LemmaReport& report, bool holds, const std::string& detail) {
  ++report.cases;
  if (holds) return;
  ++report.violations;
  if (report.examples.size() < kMaxExamples) report.examples.push_back(detail);
}

// Positions joined by equality constraints; realize() labels each class with
// a random letter, so the word satisfies exactly the imposed periods (and
// whatever else they imply).
class EqualityClasses {
 public:
  explicit EqualityClasses(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  void impose_period(std::size_t offset, std::size_t length, std::size_t p) {
    for (std::size_t i = offset; i + p < offset + length; ++i) join(i, i + p);
  }

  std::vector<Symbol> realize(SplitMix64& rng, int alphabet_size) {
    std::vector<Symbol> label(parent_.size());
    for (auto& l : label) l = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(alphabet_size)));
    std::vector<Symbol> w(parent_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = label[find(i)];
    return w;
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  std::vector<std::size_t> parent_;
};

bool two_periods_holds(std::span<const Symbol> w, std::size_t p, std::size_t q) {
  if (!has_period(w, p) || !has_period(w, q)) return true;
  const std::size_t g = std::gcd(p, q);
  if (w.size() < p + q - g) return true;
  return has_period(w, g);
}

bool period_difference_holds(std::span<const Symbol> w, std::size_t p, std::size_t q) {
  const std::size_t keep = w.size() - q;
  return has_period(w.first(keep), p - q) && has_period(w.last(keep), p - q);
}

std::string pq_detail(std::span<const Symbol> w, std::size_t p, std::size_t q) {
  return render(w) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
}

}  // namespace

bool has_overlap_form(const Word& w, std::size_t p, std::size_t k) {
  if (k > p || w.size() != 2 * p + k + 2) return false;
  const auto s = w.symbols();
  const Symbol x = s.back();
  const auto block = s.first(k);
  std::size_t at = 0;
  auto expect_block = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      if (s[at++] != block[i]) return false;
    }
    return true;
  };
  auto expect_letters = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (s[at++] != x) return false;
    }
    return true;
  };
  return expect_block() && expect_letters(p - k) && expect_block() &&
         expect_letters(p - k + 1) && expect_block() && expect_letters(1);
}

bool has_overlapping_squares(const Word& w, std::size_t p, std::size_t k) {
  if (p < 1 || k > p || w.size() != 2 * p + k + 2) return false;
  const auto s = w.symbols();
  return has_period(s.first(2 * p), p) && has_period(s.subspan(k, 2 * p + 2), p + 1);
}

LemmaReport check_two_periods_exhaustive(std::size_t max_length) {
  LemmaReport report{.name = "two-periods (exhaustive binary)"};
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const auto w = binary_word(bits, len);
      for (std::size_t p = 1; p <= len; ++p) {
        if (!has_period(w, p)) continue;
        for (std::size_t q = p; q <= len; ++q) {
          if (!has_period(w, q) || len < p + q - std::gcd(p, q)) continue;
          record(report, two_periods_holds(w, p, q), pq_detail(w, p, q));
        }
      }
    }
  }
  return report;
}

LemmaReport check_two_periods_random(std::size_t count, std::uint64_t seed) {
  LemmaReport report{.name = "two-periods (random)"};
  SplitMix64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t p = rng.between(1, 12);
    const std::size_t q = rng.between(1, 12);
    const std::size_t bound = p + q - std::gcd(p, q);
    const std::size_t len = rng.between(bound, bound + 6);
    EqualityClasses classes(len);
    classes.impose_period(0, len, p);
    classes.impose_period(0, len, q);
    const auto w = classes.realize(rng, static_cast<int>(rng.between(2, 4)));
    record(report, two_periods_holds(w, p, q), pq_detail(w, p, q));
  }
  return report;
}

LemmaReport check_period_difference_exhaustive(std::size_t max_length) {
  LemmaReport report{.name = "period-difference (exhaustive binary)"};
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const auto w = binary_word(bits, len);
      for (std::size_t p = 2; p <= len; ++p) {
        if (!has_period(w, p)) continue;
        for (std::size_t q = 1; q < p; ++q) {
          if (!has_period(w, q)) continue;
          record(report, period_difference_holds(w, p, q), pq_detail(w, p, q));
        }
      }
    }
  }
  return report;
}

LemmaReport check_period_difference_random(std::size_t count, std::uint64_t seed) {
  LemmaReport report{.name = "period-difference (random)"};
  SplitMix64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t p = rng.between(2, 14);
    const std::size_t q = rng.between(1, p - 1);
    const std::size_t len = rng.between(p, p + q + 4);
    EqualityClasses classes(len);
    classes.impose_period(0, len, p);
    classes.impose_period(0, len, q);
    const auto w = classes.realize(rng, static_cast<int>(rng.between(2, 4)));
    record(report, period_difference_holds(w, p, q), pq_detail(w, p, q));
  }
  return report;
}

LemmaReport check_overlap_glue_exhaustive(std::size_t max_length) {
  LemmaReport report{.name = "overlap-glue (exhaustive binary)"};
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const std::vector<Symbol> w = binary_word(bits, len);
      const std::span<const Symbol> s(w);
      for (std::size_t p = 1; p <= len; ++p) {
        for (std::size_t a = 0; a + p <= len; ++a) {
          for (std::size_t b = p; a + b <= len; ++b) {
            const std::size_t c = len - a - b;
            if (!has_period(s.first(a + b), p) || !has_period(s.last(b + c), p)) continue;
            record(report, has_period(s, p),
                   render(s) + " p=" + std::to_string(p) + " |a|=" + std::to_string(a) +
                       " |b|=" + std::to_string(b));
          }
        }
      }
    }
  }
  return report;
}

LemmaReport check_overlap_glue_random(std::size_t count, std::uint64_t seed) {
  LemmaReport report{.name = "overlap-glue (random)"};
  SplitMix64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t p = rng.between(1, 10);
    const std::size_t a = rng.between(0, 12);
    const std::size_t b = rng.between(p, p + 8);
    const std::size_t tail = rng.between(0, 12);
    const std::size_t len = a + b + tail;
    EqualityClasses classes(len);
    classes.impose_period(0, a + b, p);
    classes.impose_period(a, b + tail, p);
    const auto w = classes.realize(rng, static_cast<int>(rng.between(2, 4)));
    record(report, has_period(std::span<const Symbol>(w), p),
           render(w) + " p=" + std::to_string(p) + " |a|=" + std::to_string(a) +
               " |b|=" + std::to_string(b));
  }
  return report;
}

LemmaReport check_overlap_structure_exhaustive(std::size_t max_period) {
  LemmaReport report{.name = "overlap-structure (exhaustive binary)"};
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (std::size_t k = 0; k <= p; ++k) {
      const std::size_t len = 2 * p + k + 2;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        const Word w(binary_word(bits, len), Alphabet(2));
        const bool hypothesis = has_overlapping_squares(w, p, k);
        const bool form = has_overlap_form(w, p, k);
        // Both directions: hypothesis => form, and form => hypothesis.
        if (hypothesis || form) {
          record(report, hypothesis == form,
                 w.str() + " p=" + std::to_string(p) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return report;
}

LemmaReport check_overlap_structure_random(std::size_t count, std::uint64_t seed) {
  LemmaReport report{.name = "overlap-structure (random)"};
  SplitMix64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t p = rng.between(1, 16);
    const std::size_t k = rng.between(0, p);
    const std::size_t len = 2 * p + k + 2;
    EqualityClasses classes(len);
    classes.impose_period(0, 2 * p, p);
    classes.impose_period(k, 2 * p + 2, p + 1);
    const int alpha = static_cast<int>(rng.between(2, 4));
    const Word w(classes.realize(rng, alpha), Alphabet(alpha));
    record(report, has_overlapping_squares(w, p, k) && has_overlap_form(w, p, k),
           w.str() + " p=" + std::to_string(p) + " k=" + std::to_string(k));
  }
  return report;
}

std::vector<LemmaReport> run_lemma_suites(std::size_t random_cases, std::uint64_t seed) {
  return {
      check_two_periods_exhaustive(12),
      check_two_periods_random(random_cases, seed),
      check_period_difference_exhaustive(12),
      check_period_difference_random(random_cases, seed + 1),
      check_overlap_glue_exhaustive(12),
      check_overlap_glue_random(random_cases, seed + 2),
      check_overlap_structure_exhaustive(6),
      check_overlap_structure_random(random_cases, seed + 3),
  };
}

}  // namespace runforge
