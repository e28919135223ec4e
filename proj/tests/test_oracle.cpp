#include "kummer/divisors.hpp"
#include "kummer/errors.hpp"
#include "kummer/integer.hpp"
#include "kummer/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

using namespace kummer;
using kummer::testing::from_ints;

namespace {

IdealPrimeDivisor by_xi(long q, int lambda, long xi) {
  for (const auto& p : prime_divisors_of(q, lambda))
    if (p.xi() == xi) return p;
  throw std::runtime_error("no such divisor");
}

// 1,-1,2,-2,... -> 0,1,2,3,...
int value_rank(int v) { return 2 * (std::abs(v) - 1) + (v < 0); }

using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;

// Every candidate of the budget by nested enumeration, sorted by: support
// size, max |coefficient|, position tuple, then value-rank tuple.
std::vector<Key> all_candidates_sorted(int lambda, int support, int bound) {
  std::vector<Key> out;
  const int n = lambda - 1;
  std::vector<int> vals;
  for (int v = -bound; v <= bound; ++v)
    if (v != 0) vals.push_back(v);
  for (int mask = 1; mask < (1 << n); ++mask) {
    const int s = __builtin_popcount(static_cast<unsigned>(mask));
    if (s > support) continue;
    std::vector<int> pos;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) pos.push_back(i);
    std::vector<std::size_t> d(static_cast<std::size_t>(s), 0);
    while (true) {
      std::vector<int> ranks;
      int mx = 0;
      for (int i = 0; i < s; ++i) {
        const int v = vals[d[i]];
        mx = std::max(mx, std::abs(v));
        ranks.push_back(value_rank(v));
      }
      out.emplace_back(s, mx, pos, ranks);
      int i = s - 1;
      while (i >= 0 && ++d[i] == vals.size()) d[i--] = 0;
      if (i < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Key key_of(const Candidate& c) {
  std::vector<int> pos, ranks;
  int mx = 0;
  for (int i = 0; i < c.size; ++i) {
    mx = std::max(mx, std::abs(int{c.val[i]}));
    pos.push_back(c.pos[i]);
    ranks.push_back(value_rank(c.val[i]));
  }
  return {c.size, mx, pos, ranks};
}

}  // namespace

TEST_CASE("exact_divide examples") {
  const auto q = exact_divide(from_ints(5, {2, -1, 0, 0, -1}), from_ints(5, {1, -1, 0, 0, 0}));
  REQUIRE(q.has_value());
  CHECK(*q == from_ints(5, {1, 0, 0, 0, -1}));
  CHECK_FALSE(exact_divide(from_ints(5, {1, 1, 0, 0, 0}), from_ints(5, {2, 1, 0, 0, 0})).has_value());
  const auto g = from_ints(7, {3, 0, -2, 5, 1, 0, 0});
  CHECK(exact_divide(g, CyclotomicInteger::one(7)) == g);
  CHECK_THROWS_AS(exact_divide(g, CyclotomicInteger::zero(7)), InputError);
  CHECK_THROWS_AS(exact_divide(g, CyclotomicInteger::one(5)), InputError);
}

TEST_CASE("exact_divide inverts multiplication") {
  std::mt19937_64 rng(4);
  for (int lambda : {3, 5, 7, 11}) {
    for (int t = 0; t < 30; ++t) {
      const auto g = testing::random_cyclotomic(rng, lambda, 7);
      const auto h = testing::random_nonzero(rng, lambda, 7);
      const auto back = exact_divide(g * h, h);
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
  }
}

TEST_CASE("norm_via_resultant") {
  CHECK(norm_via_resultant(from_ints(5, {2, 1, 0, 0, 0})) == 11);
  CHECK(norm_via_resultant(from_ints(5, {1, -1, 0, 0, 0})) == 5);
  CHECK(norm_via_resultant(CyclotomicInteger::from_integer(5, 3)) == 81);
  CHECK(norm_via_resultant(CyclotomicInteger::zero(5)) == 0);
  std::mt19937_64 rng(12);
  for (int lambda : {3, 5, 7, 11, 13}) {
    for (int t = 0; t < 20; ++t) {
      const auto g = testing::random_cyclotomic(rng, lambda, 9);
      CHECK(norm_via_resultant(g) == norm(g));
    }
  }
}

TEST_CASE("candidate enumeration order and count") {
  const struct {
    int lambda, support, bound;
  } budgets[] = {{3, 3, 3}, {5, 2, 2}, {5, 3, 3}, {7, 3, 2}, {7, 4, 1}, {11, 2, 3}};
  for (const auto& b : budgets) {
    const SearchBudget budget{b.support, b.bound, 1'000'000};
    const auto got = enumerate_candidates(b.lambda, budget, 1'000'000);
    const auto expect = all_candidates_sorted(b.lambda, b.support, b.bound);
    CHECK(candidate_space_size(b.lambda, budget) == expect.size());
    REQUIRE(got.size() == expect.size());
    bool same = true;
    for (std::size_t i = 0; i < got.size(); ++i) same = same && key_of(got[i]) == expect[i];
    CHECK(same);
  }
  CHECK(candidate_space_size(5, {2, 2, 1}) == 112);
  CHECK(enumerate_candidates(5, {2, 2, 1000}, 10).size() == 10);

  const auto first = enumerate_candidates(5, {2, 2, 1000}, 3);
  CHECK(first[0].materialize(5) == CyclotomicInteger::one(5));
  CHECK(first[1].materialize(5) == CyclotomicInteger::from_integer(5, -1));
  CHECK(first[2].materialize(5) == CyclotomicInteger::alpha_power(5, 1));
}

TEST_CASE("budget validation") {
  CHECK_THROWS_AS(candidate_space_size(5, {0, 3, 10}), InputError);
  CHECK_THROWS_AS(candidate_space_size(5, {kMaxSupport + 1, 3, 10}), InputError);
  CHECK_THROWS_AS(candidate_space_size(5, {2, 0, 10}), InputError);
  CHECK_THROWS_AS(candidate_space_size(5, {2, 2, 0}), InputError);
  // support beyond the number of positions is clamped
  CHECK(candidate_space_size(3, {3, 3, 10}) == candidate_space_size(3, {2, 3, 10}));
}

TEST_CASE("search_generator examples") {
  const auto r = search_generator_serial(by_xi(11, 5, 9), {2, 2, 1'000'000});
  REQUIRE(r.outcome == SearchOutcome::Found);
  CHECK(abs(norm(*r.generator)) == 11);
  CHECK(divides(by_xi(11, 5, 9), *r.generator));
  CHECK(*r.generator == from_ints(5, {2, 1, 0, 0, 0}));

  const auto r2 = search_generator_serial(prime_divisors_of(2, 5)[0], {1, 2, 1'000'000});
  REQUIRE(r2.outcome == SearchOutcome::Found);
  CHECK(*r2.generator == CyclotomicInteger::from_integer(5, 2));

  for (const auto& p : prime_divisors_of(47, 23)) {
    const auto r3 = search_generator_serial(p, {3, 1, 5'000'000});
    CHECK(r3.outcome == SearchOutcome::Exhausted);
    CHECK_FALSE(r3.generator.has_value());
    CHECK(r3.enumerated == 13288);
    CHECK(r3.space_size == 13288);
  }

  CHECK_THROWS_AS(search_generator_serial(prime_divisors_of(5, 5)[0], {}), InputError);
}

TEST_CASE("budget exceeded is distinct from exhausted") {
  const auto p = prime_divisors_of(47, 23)[0];
  const auto r = search_generator_serial(p, {3, 1, 1000});
  CHECK(r.outcome == SearchOutcome::BudgetExceeded);
  CHECK(r.enumerated == 1000);
  CHECK(to_string(r.outcome) != to_string(SearchOutcome::Exhausted));
  // a generator inside the cap is still found
  CHECK(search_generator_serial(by_xi(11, 5, 9), {3, 3, 100}).outcome == SearchOutcome::Found);
}

TEST_CASE("generates") {
  const auto p9 = by_xi(11, 5, 9);
  CHECK(generates(p9, from_ints(5, {2, 1, 0, 0, 0})));
  CHECK_FALSE(generates(by_xi(11, 5, 3), from_ints(5, {2, 1, 0, 0, 0})));
  CHECK_FALSE(generates(p9, CyclotomicInteger::from_integer(5, 11)));
  CHECK_FALSE(generates(p9, CyclotomicInteger::zero(5)));
}

TEST_CASE("brute_force_divisor_check examples") {
  const auto rows = brute_force_divisor_check(11, 5, from_ints(5, {2, 1, 0, 0, 0}));
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.divides == (r.divisor.xi() == 9));
    CHECK(r.tested);
    CHECK(r.agree);
  }

  const auto rows19 = brute_force_divisor_check(19, 5, CyclotomicInteger::from_integer(5, 19), {3, 4, 5'000'000});
  REQUIRE(rows19.size() == 2);
  for (const auto& r : rows19) {
    CHECK(r.divides);
    CHECK(r.valuation == 1);
    CHECK(r.tested);
    CHECK(r.agree);
  }

  for (const auto& r : brute_force_divisor_check(11, 5, CyclotomicInteger::one(5))) {
    CHECK_FALSE(r.divides);
    CHECK(r.agree);
  }
  CHECK_THROWS_AS(brute_force_divisor_check(5, 5, CyclotomicInteger::one(5)), InputError);
}

TEST_CASE("a found generator divides exactly what its divisor divides") {
  std::mt19937_64 rng(100);
  const struct {
    int lambda;
    long q;
  } cases[] = {{5, 11}, {5, 41}, {7, 29}, {7, 43}, {7, 2}, {3, 13}, {11, 23}};
  for (const auto& c : cases) {
    for (const auto& p : prime_divisors_of(c.q, c.lambda)) {
      const auto r = search_generator(p, {3, 3, 5'000'000});
      REQUIRE(r.outcome == SearchOutcome::Found);
      const auto& h = *r.generator;
      CHECK(generates(p, h));
      for (int t = 0; t < 100; ++t) {
        auto g = testing::random_cyclotomic(rng, c.lambda, 6);
        if (t % 3 == 0) g = g * h;
        CHECK(divides(p, g) == exact_divide(g, h).has_value());
      }
    }
  }
}
