#include "runforge/anneal.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "runforge/constructions.hpp"
#include "runforge/errors.hpp"
#include "runforge/random.hpp"
#include "runforge/runs.hpp"

namespace runforge {

namespace {

struct RestartBest {
  std::vector<Symbol> word;
  std::size_t trl = 0;
};

// Word state with O(1) flips; packed when it fits a machine word.
class FlipState {
 public:
  explicit FlipState(std::vector<Symbol> start)
      : letters_(std::move(start)), packed_(letters_.size() <= PackedBinary::kMaxLength) {
    if (packed_) bits_ = pack_binary(Word(letters_, Alphabet(2))).bits;
  }

  void flip(std::size_t i) {
    letters_[i] ^= 1U;
    if (packed_) bits_ ^= std::uint64_t{1} << (letters_.size() - 1 - i);
  }

  std::size_t trl() const {
    if (packed_) return total_run_length(PackedBinary{bits_, static_cast<int>(letters_.size())});
    return total_run_length(std::span<const Symbol>(letters_));
  }

  const std::vector<Symbol>& letters() const { return letters_; }

 private:
  std::vector<Symbol> letters_;
  bool packed_;
  std::uint64_t bits_ = 0;
};

RestartBest run_restart(const AnnealConfig& config, int restart, const Word& baseline) {
  SplitMix64 rng(config.seed + static_cast<std::uint64_t>(restart));
  const auto n = static_cast<std::size_t>(config.n);
  std::vector<Symbol> start(baseline.symbols().begin(), baseline.symbols().end());
  if (restart != 0) {
    for (auto& s : start) s = static_cast<Symbol>(rng.below(2));
  }
  FlipState state(std::move(start));
  std::size_t current = state.trl();
  RestartBest best{state.letters(), current};
  double temperature = config.initial_temperature;

  for (std::uint64_t it = 0; it < config.iterations; ++it) {
    const std::size_t pos = rng.below(n);
    state.flip(pos);
    const std::size_t candidate = state.trl();
    const double delta = static_cast<double>(candidate) - static_cast<double>(current);
    // Draw unconditionally so the random stream does not depend on delta.
    const double u = rng.unit();
    if (delta >= 0 || u < std::exp(delta / temperature)) {
      current = candidate;
      if (current > best.trl) best = {state.letters(), current};
    } else {
      state.flip(pos);
    }
    temperature *= config.cooling_factor;
  }
  return best;
}

void validate(const AnnealConfig& c) {
  if (c.n < 2) throw ArgumentError("anneal needs n >= 2, got " + std::to_string(c.n));
  if (c.iterations < 1) throw ArgumentError("iterations must be at least 1");
  if (c.restarts < 1) throw ArgumentError("restarts must be at least 1");
  if (!(c.initial_temperature > 0)) throw ArgumentError("initial temperature must be positive");
  if (!(c.cooling_factor > 0 && c.cooling_factor < 1)) {
    throw ArgumentError("cooling factor must lie in (0, 1)");
  }
}

}  // namespace

SearchResult anneal_max_trl(const AnnealConfig& config) {
  validate(config);
  SearchResult result;
  result.baseline = baseline_word(config.n);
  result.baseline_trl = total_run_length(result.baseline);

  const auto restarts = static_cast<std::size_t>(config.restarts);
  std::vector<RestartBest> outcomes(restarts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r; (r = next.fetch_add(1)) < restarts;) {
      outcomes[r] = run_restart(config, static_cast<int>(r), result.baseline);
    }
  };
  if (config.jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < std::min<std::size_t>(config.jobs, restarts); ++j) pool.emplace_back(worker);
  }

  // Highest TRL wins; ties go to the lexicographically least word.
  std::vector<Symbol> best(result.baseline.symbols().begin(), result.baseline.symbols().end());
  result.best_trl = result.baseline_trl;
  for (const RestartBest& o : outcomes) {
    result.history.push_back(o.trl);
    if (o.trl > result.best_trl || (o.trl == result.best_trl && o.word < best)) {
      best = o.word;
      result.best_trl = o.trl;
    }
  }
  result.best_word = Word(std::move(best), Alphabet(2));
  result.ratio = ExactRational(result.best_trl, static_cast<unsigned long long>(config.n) * config.n);
  return result;
}

}  // namespace runforge
