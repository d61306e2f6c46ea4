#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "runforge/anneal.hpp"
#include "runforge/constructions.hpp"
#include "runforge/errors.hpp"
#include "runforge/expectation.hpp"
#include "runforge/extremal.hpp"
#include "runforge/lemmas.hpp"
#include "runforge/runs.hpp"

namespace runforge::cli {

namespace {

using nlohmann::json;

// Oracle cross-check in `runs`/`trl` is skipped above this length.
constexpr std::size_t kCrossCheckLength = 128;
constexpr int kDefaultTableLength = 22;

/// Raised when a result contradicts a checked invariant; maps to exit 4.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOutput {
  json parameters = json::object();
  json result = json::object();
  std::vector<std::string> csv;  // header first
  std::string text;
  int exit_code = kOk;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("RUNFORGE_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

json run_json(const Word& w, const Run& r) {
  return {{"start", r.start},
          {"length", r.length},
          {"period", r.period},
          {"factor", w.factor(r.start - 1, r.length).str()}};
}

std::string join_csv(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ",";
    line += c;
  }
  return line;
}

std::vector<Run> checked_runs(const Word& w) {
  auto runs = find_runs_fast(w);
  if (w.size() <= kCrossCheckLength && runs != find_runs_oracle(w)) {
    throw InvariantViolation("fast run engine disagrees with the oracle on " + w.str());
  }
  return runs;
}

// ---------------------------------------------------------------- runs / trl

struct WordOptions {
  std::vector<std::string> words;
  int alpha = 0;
};

CommandOutput cmd_runs(const WordOptions& o) {
  CommandOutput out;
  const Word w = parse_word(o.words.front(), o.alpha);
  const auto runs = checked_runs(w);
  const RunStats stats = run_stats(runs);
  out.parameters = {{"word", w.str()}, {"alpha", w.alphabet().size()}};
  json listing = json::array();
  std::ostringstream text;
  text << "word " << w.str() << " (n=" << w.size() << ")\n";
  text << "start length period factor\n";
  out.csv.push_back("start,length,period,factor");
  for (const Run& r : runs) {
    listing.push_back(run_json(w, r));
    const std::string f = w.factor(r.start - 1, r.length).str();
    text << r.start << " " << r.length << " " << r.period << " " << f << "\n";
    out.csv.push_back(join_csv({std::to_string(r.start), std::to_string(r.length),
                                std::to_string(r.period), f}));
  }
  text << "trl " << stats.trl << "\nruns " << stats.run_count << "\nexponent_sum "
       << to_fraction_string(stats.exponent_sum) << "\n";
  out.result = {{"word", w.str()},
                {"length", w.size()},
                {"runs", listing},
                {"trl", stats.trl},
                {"run_count", stats.run_count},
                {"exponent_sum", to_fraction_string(stats.exponent_sum)}};
  out.text = text.str();
  return out;
}

CommandOutput cmd_trl(const WordOptions& o) {
  CommandOutput out;
  out.parameters = {{"words", o.words}, {"alpha", o.alpha}};
  json rows = json::array();
  std::ostringstream text;
  out.csv.push_back("word,length,trl,run_count,exponent_sum");
  for (const auto& s : o.words) {
    const Word w = parse_word(s, o.alpha);
    const RunStats st = run_stats(checked_runs(w));
    const std::string eps = to_fraction_string(st.exponent_sum);
    rows.push_back({{"word", w.str()},
                    {"length", w.size()},
                    {"trl", st.trl},
                    {"run_count", st.run_count},
                    {"exponent_sum", eps}});
    out.csv.push_back(join_csv({w.str(), std::to_string(w.size()), std::to_string(st.trl),
                                std::to_string(st.run_count), eps}));
    text << w.str() << " trl=" << st.trl << " runs=" << st.run_count << " exponent_sum=" << eps
         << "\n";
  }
  out.result = {{"words", rows}};
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- tau / min-trl

struct TauOptions {
  int n = 0;
  int alpha = 2;
  std::string mode = "max";
  unsigned jobs = 1;
};

json tau_json(const TauRecord& t, long long elapsed_ms) {
  json witnesses = json::array();
  for (const Word& w : t.witnesses) witnesses.push_back(w.str());
  return {{"n", t.n},
          {"alpha", t.alphabet_size},
          {"mode", std::string(to_string(t.mode))},
          {"value", t.value},
          {"witnesses", witnesses},
          {"witness_classes", t.witness_classes},
          {"witnesses_complete", t.witnesses_complete()},
          {"words_examined", t.words_examined},
          {"elapsed_ms", elapsed_ms}};
}

std::string witness_cell(const TauRecord& t) {
  std::string cell;
  for (const Word& w : t.witnesses) cell += (cell.empty() ? "" : " ") + w.str();
  if (!t.witnesses_complete()) cell += " (+" + std::to_string(t.witness_classes - 1) + " more)";
  return cell;
}

TauRecord timed_tau(const TauOptions& o, SearchMode mode, long long& elapsed_ms) {
  const auto start = std::chrono::steady_clock::now();
  TauRecord t = tau_exhaustive(o.n, o.alpha, mode, o.jobs);
  elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return t;
}

CommandOutput cmd_tau(const TauOptions& o) {
  CommandOutput out;
  const SearchMode mode = parse_search_mode(o.mode);
  out.parameters = {{"n", o.n}, {"alpha", o.alpha}, {"mode", o.mode}, {"jobs", o.jobs}};
  long long ms = 0;
  const TauRecord t = timed_tau(o, mode, ms);
  out.result = tau_json(t, ms);
  out.csv = {"n,alpha,mode,value,witness_classes,words_examined,witnesses",
             join_csv({std::to_string(t.n), std::to_string(t.alphabet_size), o.mode,
                       std::to_string(t.value), std::to_string(t.witness_classes),
                       std::to_string(t.words_examined), witness_cell(t)})};
  std::ostringstream text;
  text << (mode == SearchMode::kMax ? "max" : "min") << " TRL over " << t.alphabet_size
       << "-letter words of length " << t.n << ": " << t.value << "\n"
       << "words examined: " << t.words_examined << "\n"
       << "extremal classes: " << t.witness_classes << "\n";
  for (const Word& w : t.witnesses) text << "  " << w.str() << "\n";
  out.text = text.str();
  return out;
}

CommandOutput cmd_min_trl(const TauOptions& o) {
  CommandOutput out;
  out.parameters = {{"n", o.n}, {"alpha", o.alpha}, {"jobs", o.jobs}};
  long long ms = 0;
  const TauRecord t = timed_tau(o, SearchMode::kMin, ms);
  out.result = tau_json(t, ms);
  std::ostringstream text;
  text << "min TRL over " << t.alphabet_size << "-letter words of length " << t.n << ": "
       << t.value << "\n";
  std::string construction_cell;
  if (o.alpha == 2 && o.n >= 6) {
    const Word w = word_min_trl(o.n);
    const std::size_t trl = total_run_length(w);
    out.result["construction"] = {{"word", w.str()},
                                  {"trl", trl},
                                  {"n_minus_4", o.n - 4},
                                  {"attains_minimum", trl == t.value}};
    text << "a b a^(n-4) b a = " << w.str() << " has TRL " << trl
         << (trl == t.value ? " (minimum)" : " (not minimal)") << "\n";
    construction_cell = w.str() + "," + std::to_string(trl);
  } else {
    construction_cell = ",";
  }
  for (const Word& w : t.witnesses) text << "  " << w.str() << "\n";
  out.csv = {"n,alpha,value,witness_classes,witnesses,construction,construction_trl",
             join_csv({std::to_string(t.n), std::to_string(t.alphabet_size),
                       std::to_string(t.value), std::to_string(t.witness_classes),
                       witness_cell(t), construction_cell})};
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string check = "all";
  int max_n = 14;
  int alpha = 2;
  std::size_t random_cases = 10'000;
  std::uint64_t seed = 1;
};

json violation_json(const CoverageViolation& v) {
  json runs = json::array();
  for (const Run& r : v.runs) runs.push_back(run_json(v.word, r));
  return {{"word", v.word.str()}, {"position", v.position}, {"period", v.period}, {"runs", runs}};
}

CommandOutput cmd_verify(const VerifyOptions& o) {
  CommandOutput out;
  out.parameters = {{"check", o.check},
                    {"max_n", o.max_n},
                    {"alpha", o.alpha},
                    {"random", o.random_cases},
                    {"seed", o.seed}};
  const bool all = o.check == "all";
  std::ostringstream text;
  out.csv.push_back("check,cases,violations");
  json checks = json::array();
  bool ok = true;

  auto coverage_check = [&](const std::string& name, const CoverageReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(violation_json(v));
    checks.push_back({{"check", name},
                      {"max_n", r.max_length},
                      {"alpha", r.alphabet_size},
                      {"cases", r.words_checked},
                      {"violations", r.violations.size()},
                      {"counterexamples", violations}});
    out.csv.push_back(join_csv({name, std::to_string(r.words_checked),
                                std::to_string(r.violations.size())}));
    text << name << ": " << r.words_checked << " words, " << r.violations.size()
         << " violations\n";
    ok = ok && r.ok();
  };

  if (all || o.check == "four-runs") coverage_check("four-runs", verify_four_runs(o.max_n, o.alpha));
  if (all || o.check == "pair-coverage") {
    coverage_check("pair-coverage", verify_pair_coverage(o.max_n, o.alpha));
  }
  if (all || o.check == "lemmas") {
    for (const LemmaReport& r : run_lemma_suites(o.random_cases, o.seed)) {
      checks.push_back({{"check", r.name},
                        {"cases", r.cases},
                        {"violations", r.violations},
                        {"counterexamples", r.examples}});
      out.csv.push_back(join_csv({r.name, std::to_string(r.cases), std::to_string(r.violations)}));
      text << r.name << ": " << r.cases << " cases, " << r.violations << " violations\n";
      ok = ok && r.ok();
    }
  }
  out.result = {{"checks", checks}, {"all_ok", ok}};
  text << (ok ? "all checks passed\n" : "VIOLATIONS FOUND\n");
  out.text = text.str();
  if (!ok) out.exit_code = kInvariant;
  return out;
}

// ---------------------------------------------------------------- construct / bounds

struct ConstructOptions {
  int k = 0;
  int n = 0;
};

CommandOutput describe_construction(const Word& w, CommandOutput out) {
  const RunStats st = run_stats(checked_runs(w));
  out.result["word"] = w.str();
  out.result["length"] = w.size();
  out.result["trl"] = st.trl;
  out.result["run_count"] = st.run_count;
  return out;
}

CommandOutput cmd_construct_u(const ConstructOptions& o) {
  CommandOutput out;
  out.parameters = {{"k", o.k}};
  out = describe_construction(word_u(o.k), std::move(out));
  const auto trl = out.result["trl"].get<std::int64_t>();
  std::ostringstream text;
  text << "u(" << o.k << ") = " << out.result["word"].get<std::string>() << "\nlength "
       << out.result["length"].get<std::size_t>() << "\ntrl " << trl << "\n";
  std::string formula_cell;
  try {
    const std::int64_t formula = trl_u_formula(o.k);
    out.result["formula"] = formula;
    out.result["formula_matches"] = formula == trl;
    text << "2k^2+8k+4 = " << formula << (formula == trl ? " (matches)" : " (MISMATCH)") << "\n";
    formula_cell = std::to_string(formula);
    if (formula != trl) throw InvariantViolation("TRL(u(k)) disagrees with 2k^2+8k+4");
  } catch (const FormulaDomainError& e) {
    out.result["formula"] = nullptr;
    out.result["warnings"] = json::array({e.what()});
    text << "warning: " << e.what() << "\n";
  }
  out.csv = {"k,word,length,trl,formula",
             join_csv({std::to_string(o.k), out.result["word"].get<std::string>(),
                       std::to_string(out.result["length"].get<std::size_t>()),
                       std::to_string(trl), formula_cell})};
  out.text = text.str();
  return out;
}

CommandOutput cmd_construct_min(const ConstructOptions& o) {
  CommandOutput out;
  out.parameters = {{"n", o.n}};
  out = describe_construction(word_min_trl(o.n), std::move(out));
  const auto trl = out.result["trl"].get<std::int64_t>();
  out.result["n_minus_4"] = o.n - 4;
  out.result["equals_n_minus_4"] = trl == o.n - 4;
  const std::string word = out.result["word"].get<std::string>();
  std::ostringstream text;
  text << "a b a^(n-4) b a = " << word << "\ntrl " << trl << " (n-4 = " << o.n - 4 << ")\n";
  out.csv = {"n,word,trl,n_minus_4",
             join_csv({std::to_string(o.n), word, std::to_string(trl), std::to_string(o.n - 4)})};
  out.text = text.str();
  return out;
}

struct BoundsOptions {
  std::int64_t max_n = 1'000'000;
};

json failures_json(const BoundCheckReport& r) {
  json f = json::array();
  for (const auto& x : r.failures) f.push_back({{"n", x.n}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return f;
}

CommandOutput cmd_bounds(const BoundsOptions& o) {
  CommandOutput out;
  out.parameters = {{"max_n", o.max_n}};
  const BoundCheckReport upper = check_upper_bound(o.max_n);
  const BoundCheckReport lower = check_lower_bound(known_binary_maximizers());
  json table = json::array();
  out.csv.push_back("n,tau,eight_tau,n_squared,upper_expr,seventy_two_tau,bound_rhs");
  std::ostringstream text;
  text << "n tau 8tau n^2 upper_expr 72tau 47n^2+144n\n";
  for (const KnownMaximizer& m : known_binary_maximizers()) {
    if (m.n > o.max_n) break;
    const std::int64_t n = m.n;
    const auto tau = static_cast<std::int64_t>(m.tau);
    const std::int64_t rhs = 47 * n * n + 144 * n;
    table.push_back({{"n", n},
                     {"tau", tau},
                     {"lower_ok", lower_bound_holds(n, tau) || n < 2},
                     {"upper_expr", upper_bound_expr(n)},
                     {"upper_ok", below_upper_bound(n, tau)}});
    out.csv.push_back(join_csv({std::to_string(n), std::to_string(tau), std::to_string(8 * tau),
                                std::to_string(n * n), std::to_string(upper_bound_expr(n)),
                                std::to_string(72 * tau), std::to_string(rhs)}));
    text << n << " " << tau << " " << 8 * tau << " " << n * n << " " << upper_bound_expr(n) << " "
         << 72 * tau << " " << rhs << "\n";
  }
  out.result = {{"upper", {{"n_max", upper.n_max}, {"all_ok", upper.all_ok()}, {"failures", failures_json(upper)}}},
                {"lower", {{"n_max", lower.n_max}, {"all_ok", lower.all_ok()}, {"failures", failures_json(lower)}}},
                {"known", table}};
  text << "72*upper_expr(n) < 47n^2+144n for n <= " << o.max_n << ": "
       << (upper.all_ok() ? "ok" : "FAILED") << "\n"
       << "8*tau(n) > n^2 for known tau: " << (lower.all_ok() ? "ok" : "FAILED") << "\n";
  out.text = text.str();
  if (!upper.all_ok() || !lower.all_ok()) out.exit_code = kInvariant;
  return out;
}

// ---------------------------------------------------------------- expected / density

struct ExpectedOptions {
  int n = 0;
  int alpha = 2;
  bool oracle = false;
  int digits = 6;
  bool verify_claims = false;
};

json claim_json(const std::string& claim, const std::string& claimed, const std::string& computed,
                bool matches) {
  return {{"claim", claim}, {"claimed", claimed}, {"computed", computed}, {"matches", matches}};
}

// Published statements that the computation contradicts or confirms.
json expectation_claims(int alpha) {
  json claims = json::array();
  const SeriesValue s2 = s2_limit(alpha, 1e-9);
  if (alpha == 2) {
    claims.push_back(claim_json("limit of S2(n) for alpha = 2", "10", to_decimal(s2.partial_sum, 6),
                                abs(s2.partial_sum - 10) <= s2.tail_bound));
  }
  const std::int64_t n = 10;  // u(2)
  claims.push_back(claim_json("TRL(u(k)) = (n^2+4n+12)/8 with n = 4k+2 (checked at n = 10)",
                              std::to_string((n * n + 4 * n + 12) / 8),
                              std::to_string(total_run_length(word_u(2))),
                              (n * n + 4 * n + 12) / 8 ==
                                  static_cast<std::int64_t>(total_run_length(word_u(2)))));
  claims.push_back(claim_json("TRL(u(k)) = (n^2+12n+4)/8 with n = 4k+2 (checked at n = 10)",
                              std::to_string(trl_u_formula_by_length(n)),
                              std::to_string(total_run_length(word_u(2))),
                              trl_u_formula_by_length(n) ==
                                  static_cast<std::int64_t>(total_run_length(word_u(2)))));
  return claims;
}

void append_claims(CommandOutput& out, std::ostringstream& text, int alpha) {
  const json claims = expectation_claims(alpha);
  out.result["claims"] = claims;
  for (const auto& c : claims) {
    if (!c["matches"].get<bool>()) {
      text << "warning: " << c["claim"].get<std::string>() << ": claimed "
           << c["claimed"].get<std::string>() << ", computed " << c["computed"].get<std::string>()
           << "\n";
    }
  }
}

CommandOutput cmd_expected(const ExpectedOptions& o) {
  CommandOutput out;
  out.parameters = {{"n", o.n}, {"alpha", o.alpha}, {"oracle", o.oracle}, {"digits", o.digits}};
  const ExpectationReport r = expected_trl_exact(o.n, o.alpha);
  const std::string total = to_fraction_string(r.total);
  const std::string decimal = to_decimal(r.total, o.digits);
  const std::string density = to_decimal(r.total / o.n, o.digits);
  out.result = {{"n", r.n},
                {"alpha", r.alpha},
                {"s1", to_fraction_string(r.s1)},
                {"s2", to_fraction_string(r.s2)},
                {"s3", to_fraction_string(r.s3)},
                {"total", total},
                {"decimal", decimal},
                {"per_letter", density}};
  std::ostringstream text;
  text << "expected TRL, n=" << o.n << " alpha=" << o.alpha << "\n"
       << "s1 " << to_fraction_string(r.s1) << "\ns2 " << to_fraction_string(r.s2) << "\ns3 "
       << to_fraction_string(r.s3) << "\ntotal " << total << " = " << decimal << "\nper letter "
       << density << "\n";
  std::string oracle_cell;
  if (o.oracle) {
    const ExactRational oracle = expected_trl_oracle(o.n, o.alpha);
    oracle_cell = to_fraction_string(oracle);
    out.result["oracle"] = oracle_cell;
    out.result["oracle_matches"] = oracle == r.total;
    text << "enumeration " << oracle_cell << (oracle == r.total ? " (matches)" : " (MISMATCH)")
         << "\n";
    if (oracle != r.total) out.exit_code = kInvariant;
  }
  if (o.verify_claims) append_claims(out, text, o.alpha);
  out.csv = {"n,alpha,s1,s2,s3,total,decimal,oracle",
             join_csv({std::to_string(o.n), std::to_string(o.alpha), to_fraction_string(r.s1),
                       to_fraction_string(r.s2), to_fraction_string(r.s3), total, decimal,
                       oracle_cell})};
  out.text = text.str();
  return out;
}

struct DensityOptions {
  int alpha = 2;
  double tolerance = 5e-5;
  int digits = 4;
  bool verify_claims = false;
};

json series_json(const SeriesValue& v, int digits) {
  std::ostringstream bound;
  bound << to_double(v.tail_bound);
  return {{"value", to_decimal(v.partial_sum, digits)},
          {"tail_bound", bound.str()},
          {"terms", v.terms}};
}

CommandOutput cmd_density(const DensityOptions& o) {
  CommandOutput out;
  out.parameters = {{"alpha", o.alpha}, {"tol", o.tolerance}, {"digits", o.digits}};
  const int alpha = o.alpha;
  const SeriesValue d = settle_digits([alpha](double t) { return trl_density(alpha, t); },
                                      o.tolerance, o.digits);
  const SeriesValue s2 = settle_digits([alpha](double t) { return s2_limit(alpha, t); },
                                       o.tolerance, o.digits);
  out.result = {{"alpha", o.alpha}, {"density", series_json(d, o.digits)},
                {"s2_limit", series_json(s2, o.digits)}};
  std::ostringstream text;
  text << "TRL density, alpha=" << o.alpha << ": " << to_decimal(d.partial_sum, o.digits)
       << " (tail < " << to_double(d.tail_bound) << ", " << d.terms << " terms)\n"
       << "limit of s2: " << to_decimal(s2.partial_sum, o.digits) << "\n";
  if (o.verify_claims) append_claims(out, text, o.alpha);
  out.csv = {"alpha,density,tail_bound,terms,s2_limit",
             join_csv({std::to_string(o.alpha), to_decimal(d.partial_sum, o.digits),
                       out.result["density"]["tail_bound"].get<std::string>(),
                       std::to_string(d.terms), to_decimal(s2.partial_sum, o.digits)})};
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- anneal

CommandOutput cmd_anneal(const AnnealConfig& c) {
  CommandOutput out;
  out.parameters = {{"n", c.n},
                    {"seed", c.seed},
                    {"iters", c.iterations},
                    {"restarts", c.restarts},
                    {"temperature", c.initial_temperature},
                    {"cooling", c.cooling_factor},
                    {"jobs", c.jobs}};
  const SearchResult r = anneal_max_trl(c);
  if (total_run_length(r.best_word) != r.best_trl) {
    throw InvariantViolation("annealing reported a TRL its word does not have");
  }
  out.result = {{"best_word", r.best_word.str()},
                {"best_trl", r.best_trl},
                {"ratio", to_decimal(r.ratio, 4)},
                {"baseline_word", r.baseline.str()},
                {"baseline_u", r.baseline_trl},
                {"history", r.history}};
  std::ostringstream text;
  text << "best " << r.best_word.str() << "\ntrl " << r.best_trl << " (ratio "
       << to_decimal(r.ratio, 4) << ")\nbaseline " << r.baseline.str() << " trl "
       << r.baseline_trl << "\n";
  out.csv.push_back("restart,best_trl");
  for (std::size_t i = 0; i < r.history.size(); ++i) {
    out.csv.push_back(join_csv({std::to_string(i), std::to_string(r.history[i])}));
  }
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- tables

struct Table1Options {
  int max_n = kDefaultTableLength;
  bool allow_large = false;
  unsigned jobs = 1;
};

CommandOutput cmd_table1(const Table1Options& o) {
  if (o.max_n > kDefaultTableLength && !o.allow_large) {
    throw CapacityError("table1 beyond n = " + std::to_string(kDefaultTableLength) +
                        " needs --allow-large");
  }
  CommandOutput out;
  out.parameters = {{"max_n", o.max_n}, {"jobs", o.jobs}};
  const auto known = known_binary_maximizers();
  json rows = json::array();
  out.csv.push_back("n,tau,ratio,witness,known_example,example_trl,matches_known");
  std::ostringstream text;
  text << "n tau tau/n^2 witness\n";
  bool consistent = true;
  for (int n = 1; n <= o.max_n; ++n) {
    const TauRecord t = tau_exhaustive(n, 2, SearchMode::kMax, o.jobs);
    const std::string ratio = to_decimal(ExactRational(t.value, static_cast<long long>(n) * n), 3);
    json row = {{"n", n},
                {"tau", t.value},
                {"ratio", ratio},
                {"witness", t.witnesses.front().str()},
                {"witness_classes", t.witness_classes}};
    std::string example;
    std::string example_trl;
    std::string matches;
    if (static_cast<std::size_t>(n) <= known.size()) {
      const KnownMaximizer& m = known[static_cast<std::size_t>(n) - 1];
      const std::size_t trl = total_run_length(parse_word(m.example, 2));
      const bool ok = trl == t.value && m.tau == t.value;
      consistent = consistent && ok;
      example = std::string(m.example);
      example_trl = std::to_string(trl);
      matches = ok ? "true" : "false";
      row["known_tau"] = m.tau;
      row["known_example"] = example;
      row["example_trl"] = trl;
      row["matches_known"] = ok;
    }
    rows.push_back(row);
    out.csv.push_back(join_csv({std::to_string(n), std::to_string(t.value), ratio,
                                t.witnesses.front().str(), example, example_trl, matches}));
    text << n << " " << t.value << " " << ratio << " " << t.witnesses.front().str() << "\n";
  }
  out.result = {{"rows", rows}, {"consistent_with_known", consistent}};
  if (!consistent) out.exit_code = kInvariant;
  out.text = text.str();
  return out;
}

struct Table2Options {
  double tolerance = 5e-5;
};

CommandOutput cmd_table2(const Table2Options& o) {
  CommandOutput out;
  out.parameters = {{"tol", o.tolerance}};
  json rows = json::array();
  out.csv.push_back("alpha,trl_density");
  std::ostringstream text;
  text << "alphabet TRL\n";
  for (int alpha : {2, 3, 5, 10}) {
    const SeriesValue d =
        settle_digits([alpha](double t) { return trl_density(alpha, t); }, o.tolerance, 4);
    const std::string v = to_decimal(d.partial_sum, 4);
    rows.push_back({{"alpha", alpha}, {"trl_density", v}, {"terms", d.terms}});
    out.csv.push_back(join_csv({std::to_string(alpha), v}));
    text << alpha << " " << v << "\n";
  }
  out.result = {{"rows", rows}};
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- rendering

void emit(const std::string& command, const std::string& format, const CommandOutput& c,
          long long elapsed_ms, std::ostream& out) {
  if (format == "json") {
    const json envelope = {{"command", command},
                           {"parameters", c.parameters},
                           {"result", c.result},
                           {"elapsed_ms", elapsed_ms},
                           {"version", std::string(kVersion)}};
    out << envelope.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& line : c.csv) out << line << "\n";
  } else {
    out << c.text;
  }
}

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Runs, total run length and extremal word search"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string format = "text";
  const unsigned jobs_default = default_jobs();

  WordOptions runs_opts;
  auto* runs = app.add_subcommand("runs", "List the runs of a word with TRL and exponent sum");
  runs->add_option("word", runs_opts.words, "Word over a..z")->required()->expected(1);
  runs->add_option("--alpha", runs_opts.alpha, "Alphabet size (default: inferred)");
  add_format(runs, format);

  WordOptions trl_opts;
  auto* trl = app.add_subcommand("trl", "TRL, run count and exponent sum of words");
  trl->add_option("words", trl_opts.words, "Words over a..z")->required();
  trl->add_option("--alpha", trl_opts.alpha, "Alphabet size (default: inferred)");
  add_format(trl, format);

  TauOptions tau_opts;
  tau_opts.jobs = jobs_default;
  auto* tau = app.add_subcommand("tau", "Exhaustive maximum (or minimum) TRL at length n");
  tau->add_option("--n", tau_opts.n, "Word length")->required();
  tau->add_option("--alpha", tau_opts.alpha, "Alphabet size");
  tau->add_option("--mode", tau_opts.mode, "max or min")->check(CLI::IsMember({"max", "min"}));
  tau->add_option("--jobs", tau_opts.jobs, "Worker threads (default: RUNFORGE_JOBS or cores)");
  add_format(tau, format);

  TauOptions min_opts;
  min_opts.jobs = jobs_default;
  auto* min_trl = app.add_subcommand("min-trl", "Exhaustive minimum TRL and the a b a^(n-4) b a word");
  min_trl->add_option("--n", min_opts.n, "Word length")->required();
  min_trl->add_option("--alpha", min_opts.alpha, "Alphabet size");
  min_trl->add_option("--jobs", min_opts.jobs, "Worker threads");
  add_format(min_trl, format);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Exhaustive coverage checks and lemma suites");
  verify->add_option("--check", verify_opts.check, "four-runs, pair-coverage, lemmas or all")
      ->check(CLI::IsMember({"four-runs", "pair-coverage", "lemmas", "all"}));
  verify->add_option("--max-n", verify_opts.max_n, "Longest word checked");
  verify->add_option("--alpha", verify_opts.alpha, "Alphabet size");
  verify->add_option("--random", verify_opts.random_cases, "Random cases per lemma");
  verify->add_option("--seed", verify_opts.seed, "Seed for the random lemma cases");
  add_format(verify, format);

  ConstructOptions construct_opts;
  auto* construct = app.add_subcommand("construct", "Explicit words: u(k) and a b a^(n-4) b a");
  construct->require_subcommand(1);
  auto* construct_u = construct->add_subcommand("u", "((ab)^k a)^2");
  construct_u->add_option("--k", construct_opts.k, "k >= 1")->required();
  add_format(construct_u, format);
  auto* construct_min = construct->add_subcommand("min", "a b a^(n-4) b a");
  construct_min->add_option("--n", construct_opts.n, "n >= 6")->required();
  add_format(construct_min, format);

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Check the lower and upper bounds on tau(n)");
  bounds->add_option("--max-n", bounds_opts.max_n, "Largest n for the upper bound check");
  add_format(bounds, format);

  ExpectedOptions expected_opts;
  auto* expected = app.add_subcommand("expected", "Exact expected TRL of a random word");
  expected->add_option("--n", expected_opts.n, "Word length")->required();
  expected->add_option("--alpha", expected_opts.alpha, "Alphabet size");
  expected->add_flag("--oracle", expected_opts.oracle, "Also average over all words");
  expected->add_option("--digits", expected_opts.digits, "Decimal places");
  expected->add_flag("--verify-paper", expected_opts.verify_claims,
                     "Compare with published closed forms and limits");
  add_format(expected, format);

  DensityOptions density_opts;
  auto* density = app.add_subcommand("density", "Limiting expected TRL per letter");
  density->add_option("--alpha", density_opts.alpha, "Alphabet size");
  density->add_option("--tol", density_opts.tolerance, "Bound on the truncated tail");
  density->add_option("--digits", density_opts.digits, "Decimal places");
  density->add_flag("--verify-paper", density_opts.verify_claims,
                    "Compare with published closed forms and limits");
  add_format(density, format);

  AnnealConfig anneal_opts;
  anneal_opts.jobs = jobs_default;
  auto* anneal = app.add_subcommand("anneal", "Simulated annealing for high-TRL binary words");
  anneal->add_option("--n", anneal_opts.n, "Word length")->required();
  anneal->add_option("--seed", anneal_opts.seed, "Seed");
  anneal->add_option("--iters", anneal_opts.iterations, "Iterations per restart");
  anneal->add_option("--restarts", anneal_opts.restarts, "Restarts");
  anneal->add_option("--temperature", anneal_opts.initial_temperature, "Initial temperature");
  anneal->add_option("--cooling", anneal_opts.cooling_factor, "Geometric cooling factor");
  anneal->add_option("--jobs", anneal_opts.jobs, "Worker threads");
  add_format(anneal, format);

  Table1Options table1_opts;
  table1_opts.jobs = jobs_default;
  auto* table1 = app.add_subcommand("table1", "Maximum binary TRL for n = 1..max-n");
  table1->add_option("--max-n", table1_opts.max_n, "Largest length");
  table1->add_flag("--allow-large", table1_opts.allow_large, "Permit max-n above 22");
  table1->add_option("--jobs", table1_opts.jobs, "Worker threads");
  add_format(table1, format);

  Table2Options table2_opts;
  auto* table2 = app.add_subcommand("table2", "Limiting TRL density for alphabets 2, 3, 5, 10");
  table2->add_option("--tol", table2_opts.tolerance, "Bound on the truncated tail");
  add_format(table2, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string command;
  std::function<CommandOutput()> handler;
  if (runs->parsed()) {
    command = "runs";
    handler = [&] { return cmd_runs(runs_opts); };
  } else if (trl->parsed()) {
    command = "trl";
    handler = [&] { return cmd_trl(trl_opts); };
  } else if (tau->parsed()) {
    command = "tau";
    handler = [&] { return cmd_tau(tau_opts); };
  } else if (min_trl->parsed()) {
    command = "min-trl";
    handler = [&] { return cmd_min_trl(min_opts); };
  } else if (verify->parsed()) {
    command = "verify";
    handler = [&] { return cmd_verify(verify_opts); };
  } else if (construct_u->parsed()) {
    command = "construct u";
    handler = [&] { return cmd_construct_u(construct_opts); };
  } else if (construct_min->parsed()) {
    command = "construct min";
    handler = [&] { return cmd_construct_min(construct_opts); };
  } else if (bounds->parsed()) {
    command = "bounds";
    handler = [&] { return cmd_bounds(bounds_opts); };
  } else if (expected->parsed()) {
    command = "expected";
    handler = [&] { return cmd_expected(expected_opts); };
  } else if (density->parsed()) {
    command = "density";
    handler = [&] { return cmd_density(density_opts); };
  } else if (anneal->parsed()) {
    command = "anneal";
    handler = [&] { return cmd_anneal(anneal_opts); };
  } else if (table1->parsed()) {
    command = "table1";
    handler = [&] { return cmd_table1(table1_opts); };
  } else {
    command = "table2";
    handler = [&] { return cmd_table2(table2_opts); };
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const CommandOutput result = handler();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    emit(command, format, result, elapsed, out);
    return result.exit_code;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace runforge::cli
