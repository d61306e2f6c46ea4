#include <algorithm>
#include <set>

#include "doctest.h"
#include "runforge/errors.hpp"
#include "runforge/extremal.hpp"

using namespace runforge;

namespace {

// Extremal value and canonical classes by full enumeration with the oracle.
std::pair<std::size_t, std::set<Word>> brute_extremum(int n, int alpha, SearchMode mode) {
  std::size_t best = mode == SearchMode::kMax ? 0 : SIZE_MAX;
  std::set<Word> classes;
  for_each_word(static_cast<std::size_t>(n), alpha, [&](const std::vector<Symbol>& s) {
    const Word w(s, Alphabet(alpha));
    std::size_t trl = 0;
    for (const Run& r : find_runs_oracle(w)) trl += r.length;
    const bool better = mode == SearchMode::kMax ? trl > best : trl < best;
    if (better) {
      best = trl;
      classes.clear();
    }
    if (trl == best) classes.insert(canonical_form(w));
  });
  return {best, classes};
}

bool contains(const std::vector<Word>& ws, const Word& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

}  // namespace

TEST_CASE("tau examples") {
  const TauRecord t10 = tau_exhaustive(10, 2, SearchMode::kMax);
  CHECK(t10.value == 29);
  CHECK(contains(t10.witnesses, canonical_form(parse_word("aababaabab", 2))));
  CHECK(t10.words_examined == 512);
  CHECK(tau_exhaustive(17, 2, SearchMode::kMax).value == 70);

  const TauRecord m10 = tau_exhaustive(10, 2, SearchMode::kMin);
  CHECK(m10.value == 6);
  CHECK(contains(m10.witnesses, canonical_form(parse_word("abaaaaaaba", 2))));
  CHECK(tau_exhaustive(4, 2, SearchMode::kMin).value == 2);
}

TEST_CASE("known maximizers") {
  const auto known = known_binary_maximizers();
  REQUIRE(known.size() == 22);
  for (const KnownMaximizer& m : known) {
    const Word w = parse_word(m.example, 2);
    CHECK(w.size() == static_cast<std::size_t>(m.n));
    CHECK(total_run_length(w) == m.tau);
  }
}

TEST_CASE("binary tau matches the known table up to n = 18") {
  std::size_t previous = 0;
  for (const KnownMaximizer& m : known_binary_maximizers()) {
    if (m.n > 18) break;
    const TauRecord t = tau_exhaustive(m.n, 2, SearchMode::kMax);
    CHECK(t.value == m.tau);
    CHECK(t.value >= previous);
    previous = t.value;
    if (t.witnesses_complete()) {
      CHECK(contains(t.witnesses, canonical_form(parse_word(m.example, 2))));
    }
  }
}

TEST_CASE("binary minimum TRL for small n") {
  const std::size_t small[] = {0, 0, 0, 2, 2};
  for (int n = 1; n <= 5; ++n) CHECK(tau_exhaustive(n, 2, SearchMode::kMin).value == small[n - 1]);
  // n = 6 is the exception to n - 4: every length-6 binary word has TRL >= 3.
  const TauRecord six = tau_exhaustive(6, 2, SearchMode::kMin);
  CHECK(six.value == 3);
  CHECK(contains(six.witnesses, parse_word("abaaab", 2)));
  for (int n = 7; n <= 16; ++n) {
    CHECK(tau_exhaustive(n, 2, SearchMode::kMin).value == static_cast<std::size_t>(n - 4));
  }
}

TEST_CASE("search agrees with oracle enumeration") {
  for (int n = 1; n <= 12; ++n) {
    for (SearchMode mode : {SearchMode::kMax, SearchMode::kMin}) {
      const auto [value, classes] = brute_extremum(n, 2, mode);
      const TauRecord t = tau_exhaustive(n, 2, mode);
      REQUIRE(t.value == value);
      REQUIRE(t.witness_classes == classes.size());
      if (t.witnesses_complete()) {
        REQUIRE(std::vector<Word>(classes.begin(), classes.end()) == t.witnesses);
      } else {
        REQUIRE(t.witnesses.front() == *classes.begin());
      }
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for (SearchMode mode : {SearchMode::kMax, SearchMode::kMin}) {
      const auto [value, classes] = brute_extremum(n, 3, mode);
      const TauRecord t = tau_exhaustive(n, 3, mode);
      REQUIRE(t.value == value);
      REQUIRE(t.witness_classes == classes.size());
    }
  }
}

TEST_CASE("witness records are canonical, sorted and extremal") {
  for (int n : {5, 9, 13}) {
    for (int alpha : {2, 3}) {
      const TauRecord t = tau_exhaustive(n, alpha, SearchMode::kMax);
      REQUIRE(!t.witnesses.empty());
      CHECK(std::is_sorted(t.witnesses.begin(), t.witnesses.end()));
      CHECK(std::adjacent_find(t.witnesses.begin(), t.witnesses.end()) == t.witnesses.end());
      for (const Word& w : t.witnesses) {
        CHECK(w.size() == static_cast<std::size_t>(n));
        CHECK(canonical_form(w) == w);
        CHECK(total_run_length(w) == t.value);
      }
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (SearchMode mode : {SearchMode::kMax, SearchMode::kMin}) {
    const TauRecord one = tau_exhaustive(16, 2, mode, 1);
    for (unsigned jobs : {2U, 3U, 8U}) {
      const TauRecord many = tau_exhaustive(16, 2, mode, jobs);
      CHECK(many.value == one.value);
      CHECK(many.witnesses == one.witnesses);
      CHECK(many.witness_classes == one.witness_classes);
    }
    CHECK(tau_exhaustive(8, 3, mode, 4).witnesses == tau_exhaustive(8, 3, mode, 1).witnesses);
  }
}

TEST_CASE("large witness sets are summarized") {
  // Many ternary words of length 10 have no runs at all.
  const TauRecord t = tau_exhaustive(10, 3, SearchMode::kMin);
  CHECK(t.value == 0);
  CHECK(t.witness_classes > kMaxListedWitnesses);
  CHECK(t.witnesses.size() == 1);
  CHECK_FALSE(t.witnesses_complete());
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(tau_exhaustive(kMaxBinarySearchLength + 1, 2, SearchMode::kMax), CapacityError);
  CHECK_THROWS_AS(tau_exhaustive(15, 3, SearchMode::kMax), CapacityError);
  CHECK_THROWS_AS(tau_exhaustive(0, 2, SearchMode::kMax), CapacityError);
  CHECK_THROWS_AS(tau_exhaustive(5, 1, SearchMode::kMax), CapacityError);
  CHECK_THROWS_AS(verify_four_runs(40, 2), CapacityError);
}

TEST_CASE("search mode parsing") {
  CHECK(parse_search_mode("max") == SearchMode::kMax);
  CHECK(parse_search_mode("min") == SearchMode::kMin);
  CHECK(to_string(SearchMode::kMin) == "min");
  CHECK_THROWS_AS(parse_search_mode("mean"), ArgumentError);
}

TEST_CASE("four-runs verifier") {
  const CoverageReport binary = verify_four_runs(12, 2);
  CHECK(binary.ok());
  CHECK(binary.words_checked == 8190);
  CHECK(verify_four_runs(6, 3).ok());
  CHECK(four_runs_violations(parse_word("aaaa")).empty());
  const auto cover = coverage(parse_word("aaaa"));
  CHECK(cover[1].size() == 1);
}

TEST_CASE("pair-coverage verifier") {
  CHECK(verify_pair_coverage(12, 2).ok());
  CHECK(verify_pair_coverage(8, 3).ok());
  CHECK(find_runs_fast(parse_word("aa")).size() == 1);
  CHECK(pair_coverage_violations(parse_word("aa")).empty());
}

TEST_CASE("for_each_word enumerates in lexicographic order") {
  std::vector<std::string> seen;
  for_each_word(2, 3, [&](const std::vector<Symbol>& s) { seen.push_back(Word(s, Alphabet(3)).str()); });
  CHECK(seen == std::vector<std::string>{"aa", "ab", "ac", "ba", "bb", "bc", "ca", "cb", "cc"});
  int count = 0;
  for_each_word(0, 2, [&](const std::vector<Symbol>&) { ++count; });
  CHECK(count == 1);
}
