// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "runforge/anneal.hpp"
#include "runforge/constructions.hpp"
#include "runforge/expectation.hpp"
#include "runforge/extremal.hpp"
#include "runforge/lemmas.hpp"
#include "runforge/random.hpp"
#include "runforge/runs.hpp"

using namespace runforge;

namespace {

// Pinned tolerances and budgets.
constexpr double kDensityTolerance = 1e-4;
constexpr double kDensitySeconds = 1.0;
constexpr double kBoundSeconds = 5.0;
constexpr std::int64_t kBoundMaxN = 1'000'000;
constexpr std::size_t kRandomWords = 10'000;
constexpr std::size_t kLemmaRandomCases = 10'000;
constexpr std::uint64_t kSeed = 20240601;

const std::vector<std::size_t> kTau = {0,  2,  3,  4,  6,  10, 12, 16, 19, 29, 32,
                                       37, 42, 47, 53, 60, 70, 73, 80, 85, 92, 99};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    else if (detail.tellp() < 400) detail << "; " << why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome table_one(unsigned jobs) {
  Outcome o;
  for (int n = 1; n <= 22; ++n) {
    const std::size_t want = kTau[static_cast<std::size_t>(n) - 1];
    const TauRecord t = tau_exhaustive(n, 2, SearchMode::kMax, jobs);
    if (t.value != want) {
      o.fail("tau(" + std::to_string(n) + ") = " + std::to_string(t.value) + ", want " +
             std::to_string(want));
    }
  }
  for (const KnownMaximizer& m : known_binary_maximizers()) {
    const std::size_t trl = total_run_length(parse_word(m.example, 2));
    if (trl != kTau[static_cast<std::size_t>(m.n) - 1]) {
      o.fail("example for n=" + std::to_string(m.n) + " has TRL " + std::to_string(trl));
    }
  }
  if (o.pass) o.detail << "tau(1..22) and all 22 example words match";
  return o;
}

Outcome minimum(unsigned jobs) {
  Outcome o;
  const std::vector<std::size_t> small = {0, 0, 0, 2, 2};
  for (int n = 1; n <= 18; ++n) {
    const TauRecord t = tau_exhaustive(n, 2, SearchMode::kMin, jobs);
    const std::size_t want = n <= 5 ? small[static_cast<std::size_t>(n) - 1]
                                    : static_cast<std::size_t>(n - 4);
    if (t.value != want) {
      o.fail("min TRL at n=" + std::to_string(n) + " is " + std::to_string(t.value) + " (" +
             t.witnesses.front().str() + "), want " + std::to_string(want));
    }
  }
  for (int n = 6; n <= 500; ++n) {
    const Word w = word_min_trl(n);
    const std::size_t trl = total_run_length(w);
    if (trl != static_cast<std::size_t>(n - 4)) {
      o.fail("TRL(" + w.str() + ") = " + std::to_string(trl) + ", want " +
             std::to_string(n - 4));
    }
  }
  if (o.pass) o.detail << "n-4 for 6..18, (0,0,0,2,2) for 1..5, construction to 500";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::uint64_t compared = 0;
  for (int n = 1; n <= 14; ++n) {
    for_each_word(static_cast<std::size_t>(n), 2, [&](const std::vector<Symbol>& s) {
      const Word w(s, Alphabet(2));
      ++compared;
      if (find_runs_fast(w) != find_runs_oracle(w)) o.fail("mismatch on " + w.str());
      if (find_runs_fast(pack_binary(w)) != find_runs_oracle(w)) o.fail("packed mismatch on " + w.str());
    });
  }
  SplitMix64 rng(kSeed);
  for (std::size_t i = 0; i < kRandomWords; ++i) {
    const int alpha = static_cast<int>(rng.between(1, 4));
    const std::size_t len = rng.between(1, 60);
    std::vector<Symbol> s(len);
    for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(alpha)));
    const Word w(s, Alphabet(alpha));
    ++compared;
    if (find_runs_fast(w) != find_runs_oracle(w)) o.fail("mismatch on " + w.str());
  }
  if (o.pass) o.detail << compared << " words, zero mismatches";
  return o;
}

Outcome expectation_exactness() {
  Outcome o;
  auto check = [&](int alpha, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
      const ExactRational exact = expected_trl_exact(n, alpha).total;
      const ExactRational oracle = expected_trl_oracle(n, alpha);
      if (exact != oracle) {
        o.fail("alpha=" + std::to_string(alpha) + " n=" + std::to_string(n) + ": " +
               to_fraction_string(exact) + " vs " + to_fraction_string(oracle));
      }
    }
  };
  check(2, 14);
  check(3, 9);
  if (expected_trl_exact(2, 2).total != 1) o.fail("E(2,2) != 1");
  if (expected_trl_exact(3, 2).total != ExactRational(7, 4)) o.fail("E(3,2) != 7/4");
  if (o.pass) o.detail << "exact = enumeration for alpha 2 (n<=14) and 3 (n<=9); spot values 1, 7/4";
  return o;
}

Outcome table_two() {
  Outcome o;
  const std::vector<std::pair<int, double>> expected = {
      {2, 1.9775}, {3, 1.0290}, {5, 0.5208}, {10, 0.2296}};
  std::string values;
  for (const auto& [alpha, want] : expected) {
    const auto start = std::chrono::steady_clock::now();
    const SeriesValue v = trl_density(alpha, 5e-5);
    const double secs = seconds_since(start);
    const std::string text = to_decimal(v.partial_sum, 4);
    const double got = std::stod(text);
    if (std::abs(got - want) > kDensityTolerance + 1e-12) {
      o.fail("alpha=" + std::to_string(alpha) + " gives " + text);
    }
    if (secs >= kDensitySeconds) o.fail("alpha=" + std::to_string(alpha) + " took " + std::to_string(secs) + " s");
    values += (values.empty() ? "" : " ") + text;
  }
  if (o.pass) o.detail << "computed " << values << " at tolerance 5e-5";
  return o;
}

Outcome coverage_verifiers() {
  Outcome o;
  std::uint64_t words = 0;
  for (const CoverageReport& r :
       {verify_four_runs(14, 2), verify_four_runs(8, 3), verify_pair_coverage(14, 2),
        verify_pair_coverage(8, 3)}) {
    words += r.words_checked;
    if (!r.ok()) {
      o.fail(std::to_string(r.violations.size()) + " violations at alpha=" +
             std::to_string(r.alphabet_size) + ", first " + r.violations.front().word.str());
    }
  }
  if (o.pass) o.detail << words << " word checks, zero violations";
  return o;
}

Outcome construction_formula() {
  Outcome o;
  for (int k = 2; k <= 50; ++k) {
    const auto trl = static_cast<std::int64_t>(total_run_length(word_u(k)));
    if (trl != trl_u_formula(k)) o.fail("k=" + std::to_string(k) + " TRL " + std::to_string(trl));
  }
  if (total_run_length(word_u(1)) != 8) o.fail("TRL(u(1)) != 8");
  if (o.pass) o.detail << "2k^2+8k+4 for k=2..50, TRL(u(1)) = 8";
  return o;
}

Outcome bounds() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const BoundCheckReport upper = check_upper_bound(kBoundMaxN);
  const double secs = seconds_since(start);
  if (!upper.all_ok()) o.fail("upper bound fails at n=" + std::to_string(upper.failures.front().n));
  if (secs >= kBoundSeconds) o.fail("upper bound check took " + std::to_string(secs) + " s");
  for (int n = 2; n <= 22; ++n) {
    const auto tau = static_cast<std::int64_t>(kTau[static_cast<std::size_t>(n) - 1]);
    if (!(8 * tau > static_cast<std::int64_t>(n) * n)) o.fail("8 tau(" + std::to_string(n) + ") <= n^2");
  }
  if (o.pass) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << secs;
    o.detail << "upper to n=10^6 in " << s.str() << " s, lower for n=2..22";
  }
  return o;
}

Outcome lemma_suites() {
  Outcome o;
  std::size_t cases = 0;
  for (const LemmaReport& r : run_lemma_suites(kLemmaRandomCases, kSeed)) {
    cases += r.cases;
    if (!r.ok()) o.fail(r.name + ": " + std::to_string(r.violations) + " violations");
  }
  if (o.pass) o.detail << cases << " cases, zero violations";
  return o;
}

Outcome heuristic(unsigned jobs) {
  Outcome o;
  for (int n = 5; n <= 16; ++n) {
    AnnealConfig c;
    c.n = n;
    c.jobs = jobs;
    const SearchResult r = anneal_max_trl(c);
    const std::size_t tau = kTau[static_cast<std::size_t>(n) - 1];
    if (r.best_trl != tau) {
      o.fail("n=" + std::to_string(n) + " best " + std::to_string(r.best_trl) + " < " +
             std::to_string(tau));
    }
    if (r.best_trl < r.baseline_trl) o.fail("n=" + std::to_string(n) + " below baseline");
  }
  if (o.pass) o.detail << "tau(n) reached for n=5..16, never below the u(k) baseline";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--jobs", jobs, "Worker threads");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table 1 reproduction", [&] { return table_one(jobs); }},
      {"minimum TRL n-4", [&] { return minimum(jobs); }},
      {"fast engine = oracle", oracle_equivalence},
      {"expectation exactness", expectation_exactness},
      {"table 2 density", table_two},
      {"four-runs and pair coverage", coverage_verifiers},
      {"u(k) formula", construction_formula},
      {"bounds", bounds},
      {"lemma suites", lemma_suites},
      {"annealing", [&] { return heuristic(jobs); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double secs = seconds_since(start);
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " ["
              << static_cast<long long>(secs * 1000) << " ms] " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
