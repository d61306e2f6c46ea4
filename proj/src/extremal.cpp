#include "runforge/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>

#include "runforge/errors.hpp"

namespace runforge {

namespace {

constexpr std::size_t kBlocksPerJob = 16;

constexpr KnownMaximizer kKnownMaximizers[] = {
    {1, 0, "a"},
    {2, 2, "aa"},
    {3, 3, "aaa"},
    {4, 4, "aaaa"},
    {5, 6, "aabab"},
    {6, 10, "aabaab"},
    {7, 12, "aabaabb"},
    {8, 16, "aabbaabb"},
    {9, 19, "abaaabaab"},
    {10, 29, "aababaabab"},
    {11, 32, "abaababaaba"},
    {12, 37, "abaababaabab"},
    {13, 42, "ababbababbaba"},
    {14, 47, "aaabaabaaabaab"},
    {15, 53, "abaabababaababa"},
    {16, 60, "aabaababaabaabab"},
    {17, 70, "ababaabababaababa"},
    {18, 73, "aababaabababaababa"},
    {19, 80, "abaababaabaababaaba"},
    {20, 85, "abaababaabaababaabab"},
    {21, 92, "ababaababababaabababa"},
    {22, 99, "aababaababaaababaababa"},
};

bool improves(SearchMode mode, std::size_t candidate, std::size_t current) {
  return mode == SearchMode::kMax ? candidate > current : candidate < current;
}

// Extremal value and canonical representatives seen by one block.
template <typename Key>
struct BlockBest {
  std::optional<std::size_t> value;
  std::vector<Key> keys;

  void offer(SearchMode mode, std::size_t trl, const auto& make_key) {
    if (!value || improves(mode, trl, *value)) {
      value = trl;
      keys.clear();
      keys.push_back(make_key());
    } else if (trl == *value) {
      keys.push_back(make_key());
    }
  }
};

template <typename Key>
BlockBest<Key> merge_blocks(SearchMode mode, std::vector<BlockBest<Key>>& blocks) {
  BlockBest<Key> out;
  for (auto& b : blocks) {
    if (!b.value) continue;
    if (!out.value || improves(mode, *b.value, *out.value)) {
      out.value = b.value;
      out.keys = std::move(b.keys);
    } else if (*b.value == *out.value) {
      out.keys.insert(out.keys.end(), b.keys.begin(), b.keys.end());
    }
  }
  std::sort(out.keys.begin(), out.keys.end());
  out.keys.erase(std::unique(out.keys.begin(), out.keys.end()), out.keys.end());
  return out;
}

template <typename Work>
void run_blocks(std::size_t blocks, unsigned jobs, Work&& work) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b; (b = next.fetch_add(1)) < blocks;) work(b);
  };
  if (jobs <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
}

template <typename Key, typename ToWord>
void fill_witnesses(TauRecord& record, const BlockBest<Key>& best, ToWord&& to_word) {
  record.value = best.value.value_or(0);
  record.witness_classes = best.keys.size();
  const std::size_t listed = best.keys.size() <= kMaxListedWitnesses ? best.keys.size() : 1;
  for (std::size_t i = 0; i < listed; ++i) record.witnesses.push_back(to_word(best.keys[i]));
}

TauRecord tau_binary(int n, SearchMode mode, unsigned jobs) {
  TauRecord record{.n = n, .alphabet_size = 2, .mode = mode};
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const std::size_t block_count =
      static_cast<std::size_t>(std::min<std::uint64_t>(total, kBlocksPerJob * std::max(1U, jobs)));
  std::vector<BlockBest<std::uint64_t>> blocks(block_count);

  run_blocks(block_count, jobs, [&](std::size_t b) {
    const std::uint64_t lo = total * b / block_count;
    const std::uint64_t hi = total * (b + 1) / block_count;
    auto& best = blocks[b];
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      const PackedBinary w{bits, n};
      best.offer(mode, total_run_length(w), [&] { return canonical_form(w).bits; });
    }
  });

  record.words_examined = total;
  fill_witnesses(record, merge_blocks(mode, blocks),
                 [&](std::uint64_t bits) { return unpack_binary({bits, n}); });
  return record;
}

TauRecord tau_general(int n, int alphabet_size, SearchMode mode, unsigned jobs) {
  TauRecord record{.n = n, .alphabet_size = alphabet_size, .mode = mode};
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(alphabet_size);
  const std::size_t block_count =
      static_cast<std::size_t>(std::min<std::uint64_t>(total, kBlocksPerJob * std::max(1U, jobs)));
  using Key = std::vector<Symbol>;
  std::vector<BlockBest<Key>> blocks(block_count);
  const auto len = static_cast<std::size_t>(n);
  const auto top = static_cast<Symbol>(alphabet_size - 1);

  run_blocks(block_count, jobs, [&](std::size_t b) {
    const std::uint64_t lo = total * b / block_count;
    const std::uint64_t hi = total * (b + 1) / block_count;
    Key w(len);
    std::uint64_t index = lo;
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(alphabet_size));
      index /= static_cast<std::uint64_t>(alphabet_size);
    }
    auto& best = blocks[b];
    for (std::uint64_t count = lo; count < hi; ++count) {
      best.offer(mode, total_run_length(std::span<const Symbol>(w)), [&] {
        Key r(w.rbegin(), w.rend());
        return std::min(w, r);
      });
      std::size_t i = len;
      while (i > 0 && w[i - 1] == top) w[--i] = 0;
      if (i > 0) ++w[i - 1];
    }
  });

  record.words_examined = total;
  fill_witnesses(record, merge_blocks(mode, blocks),
                 [&](const Key& k) { return Word(k, Alphabet(alphabet_size)); });
  return record;
}

std::uint64_t verifier_word_count(int max_length, int alphabet_size) {
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (int len = 1; len <= max_length; ++len) {
    power *= static_cast<std::uint64_t>(alphabet_size);
    sum += power;
    if (sum > kMaxVerifierWords) {
      throw CapacityError("verification over " + std::to_string(alphabet_size) +
                          "-letter words up to length " + std::to_string(max_length) +
                          " exceeds the limit of " + std::to_string(kMaxVerifierWords) + " words");
    }
  }
  return sum;
}

// counts[p] = number of runs with period p covering the position.
template <typename Check>
std::vector<CoverageViolation> scan_coverage(const Word& w, Check&& check) {
  std::vector<CoverageViolation> out;
  const auto runs = find_runs_fast(w);
  if (runs.empty()) return out;
  const auto cover = coverage(w.size(), runs);
  std::vector<std::size_t> counts(w.size() / 2 + 3);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const Run& r : cover[i]) ++counts[r.period];
    for (std::size_t key : check(counts)) out.push_back({w, i + 1, key, runs});
  }
  return out;
}

template <typename PerWord>
CoverageReport verify_all(int max_length, int alphabet_size, PerWord&& per_word) {
  if (max_length < 0) throw ArgumentError("maximum length must be non-negative");
  if (alphabet_size < 1) throw ArgumentError("alphabet size must be positive");
  CoverageReport report{.max_length = max_length,
                        .alphabet_size = alphabet_size,
                        .words_checked = verifier_word_count(max_length, alphabet_size)};
  const Alphabet alphabet(alphabet_size);
  for (int len = 1; len <= max_length; ++len) {
    for_each_word(static_cast<std::size_t>(len), alphabet_size, [&](const std::vector<Symbol>& s) {
      for (auto& v : per_word(Word(s, alphabet))) report.violations.push_back(std::move(v));
    });
  }
  return report;
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::kMax ? "max" : "min";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "max") return SearchMode::kMax;
  if (text == "min") return SearchMode::kMin;
  throw ArgumentError("mode must be 'max' or 'min', got '" + std::string(text) + "'");
}

TauRecord tau_exhaustive(int n, int alphabet_size, SearchMode mode, unsigned jobs) {
  if (alphabet_size < 2) {
    throw CapacityError("exhaustive search needs an alphabet of at least 2 letters");
  }
  if (n < 1) throw CapacityError("word length must be at least 1");
  if (alphabet_size == 2) {
    if (n > kMaxBinarySearchLength) {
      throw CapacityError("binary exhaustive search supports n <= " +
                          std::to_string(kMaxBinarySearchLength) + ", got " + std::to_string(n));
    }
    return tau_binary(n, mode, jobs);
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(alphabet_size);
    if (total > kMaxGeneralSearchWords) {
      throw CapacityError("exhaustive search supports at most " +
                          std::to_string(kMaxGeneralSearchWords) + " words (alpha^n); " +
                          std::to_string(alphabet_size) + "^" + std::to_string(n) + " is larger");
    }
  }
  return tau_general(n, alphabet_size, mode, jobs);
}

std::vector<CoverageViolation> four_runs_violations(const Word& w) {
  return scan_coverage(w, [](const std::vector<std::size_t>& counts) {
    std::vector<std::size_t> bad;
    for (std::size_t p = 1; p + 1 < counts.size(); ++p) {
      if (counts[p] >= 2 && counts[p + 1] >= 2) bad.push_back(p);
    }
    return bad;
  });
}

std::vector<CoverageViolation> pair_coverage_violations(const Word& w) {
  return scan_coverage(w, [](const std::vector<std::size_t>& counts) {
    std::vector<std::size_t> bad;
    for (std::size_t q = 1; 2 * q < counts.size(); ++q) {
      if (counts[2 * q - 1] + counts[2 * q] > 3) bad.push_back(q);
    }
    return bad;
  });
}

CoverageReport verify_four_runs(int max_length, int alphabet_size) {
  return verify_all(max_length, alphabet_size, [](const Word& w) { return four_runs_violations(w); });
}

CoverageReport verify_pair_coverage(int max_length, int alphabet_size) {
  return verify_all(max_length, alphabet_size,
                    [](const Word& w) { return pair_coverage_violations(w); });
}

std::span<const KnownMaximizer> known_binary_maximizers() { return kKnownMaximizers; }

}  // namespace runforge
