#include "doctest.h"
#include "runforge/anneal.hpp"
#include "runforge/constructions.hpp"
#include "runforge/errors.hpp"
#include "runforge/runs.hpp"

using namespace runforge;

namespace {

AnnealConfig small(int n, std::uint64_t seed) {
  AnnealConfig c;
  c.n = n;
  c.seed = seed;
  c.iterations = 20'000;
  c.restarts = 6;
  return c;
}

}  // namespace

TEST_CASE("anneal finds the maximum at n = 10") {
  const SearchResult r = anneal_max_trl(small(10, 42));
  CHECK(r.best_trl == 29);
  CHECK(r.best_word.size() == 10);
  CHECK(total_run_length(r.best_word) == r.best_trl);
  CHECK(r.baseline_trl == 28);
  CHECK(r.ratio == ExactRational(29, 100));
}

TEST_CASE("anneal never falls below the baseline") {
  for (int n : {2, 3, 7, 10, 23, 50, 70, 90}) {
    AnnealConfig c = small(n, 5);
    c.iterations = 50;
    c.restarts = 2;
    const SearchResult r = anneal_max_trl(c);
    CHECK(r.best_trl >= r.baseline_trl);
    CHECK(r.best_word.size() == static_cast<std::size_t>(n));
    CHECK(total_run_length(r.best_word) == r.best_trl);
    CHECK(r.history.size() == 2);
  }
  AnnealConfig c = small(50, 9);
  c.iterations = 1;
  c.restarts = 1;
  CHECK(8 * anneal_max_trl(c).best_trl > 2500);
}

TEST_CASE("anneal is reproducible and independent of jobs") {
  AnnealConfig c = small(24, 123);
  const SearchResult a = anneal_max_trl(c);
  c.jobs = 3;
  const SearchResult b = anneal_max_trl(c);
  CHECK(a.best_word == b.best_word);
  CHECK(a.best_trl == b.best_trl);
  CHECK(a.history == b.history);
  c.seed = 124;
  c.jobs = 1;
  CHECK(anneal_max_trl(c).history != a.history);
}

TEST_CASE("anneal on lengths beyond the packed representation") {
  AnnealConfig c = small(100, 1);
  c.iterations = 300;
  c.restarts = 2;
  const SearchResult r = anneal_max_trl(c);
  CHECK(total_run_length(r.best_word) == r.best_trl);
  CHECK(r.best_trl >= total_run_length(word_u(24)));
}

TEST_CASE("anneal rejects bad configurations") {
  AnnealConfig c = small(10, 1);
  c.n = 1;
  CHECK_THROWS_AS(anneal_max_trl(c), ArgumentError);
  c = small(10, 1);
  c.restarts = 0;
  CHECK_THROWS_AS(anneal_max_trl(c), ArgumentError);
  c = small(10, 1);
  c.iterations = 0;
  CHECK_THROWS_AS(anneal_max_trl(c), ArgumentError);
  c = small(10, 1);
  c.cooling_factor = 1.0;
  CHECK_THROWS_AS(anneal_max_trl(c), ArgumentError);
  c = small(10, 1);
  c.initial_temperature = 0;
  CHECK_THROWS_AS(anneal_max_trl(c), ArgumentError);
}
