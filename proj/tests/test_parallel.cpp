#include "kummer/divisors.hpp"
#include "kummer/oracle.hpp"
#include "kummer/sweep.hpp"

#include <doctest.h>
#include <omp.h>

using namespace kummer;

namespace {

void check_same(const SearchResult& a, const SearchResult& b) {
  CHECK(a.outcome == b.outcome);
  CHECK(a.index == b.index);
  CHECK(a.enumerated == b.enumerated);
  CHECK(a.space_size == b.space_size);
  CHECK(a.generator == b.generator);
}

}  // namespace

TEST_CASE("parallel search returns the serial result") {
  omp_set_num_threads(4);
  const struct {
    int lambda;
    long q;
    SearchBudget budget;
  } cases[] = {
      {5, 11, {3, 3, 5'000'000}},  {5, 31, {3, 3, 5'000'000}},  {7, 29, {3, 3, 5'000'000}},
      {7, 2, {3, 3, 5'000'000}},   {5, 19, {3, 4, 5'000'000}},  {13, 53, {3, 2, 5'000'000}},
      {23, 47, {3, 1, 5'000'000}}, {23, 47, {3, 1, 20'000}},    {23, 47, {3, 1, 777}},
      {5, 7, {3, 3, 5'000'000}},
  };
  for (const auto& c : cases)
    for (const auto& p : prime_divisors_of(c.q, c.lambda)) check_same(search_generator(p, c.budget), search_generator_serial(p, c.budget));
}

TEST_CASE("parallel search finds a generator beyond the first chunk") {
  omp_set_num_threads(4);
  // for lambda = 7, q = 11 (f = 3) the first generators sit past index 22000
  for (const auto& p : prime_divisors_of(11, 7)) {
    const SearchBudget budget{4, 5, 5'000'000};
    const auto par = search_generator(p, budget);
    CHECK(par.outcome == SearchOutcome::Found);
    CHECK(par.index > 16384);
    check_same(par, search_generator_serial(p, budget));
  }
}

TEST_CASE("parallel sweep equals the serial sweep") {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (int lambda : {3, 5, 7}) {
      const SearchBudget budget{3, 3, 5'000'000};
      const auto par = sweep_table(lambda, 50, budget);
      const auto ser = sweep_table_serial(lambda, 50, budget);
      CHECK(format_sweep_jsonl(lambda, budget, par) == format_sweep_jsonl(lambda, budget, ser));
      CHECK(format_sweep_text(lambda, budget, par) == format_sweep_text(lambda, budget, ser));
    }
  }
}
