#include "kummer/divisors.hpp"
#include "kummer/errors.hpp"
#include "kummer/integer.hpp"
#include "kummer/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace kummer;
using kummer::testing::from_ints;

namespace {

IdealPrimeDivisor by_xi(long q, int lambda, long xi) {
  for (const auto& p : prime_divisors_of(q, lambda))
    if (p.xi() == xi) return p;
  throw std::runtime_error("no such divisor");
}

// Multiplicity by repeated actual division; independent of psi.
int oracle_valuation(const CyclotomicInteger& g, const CyclotomicInteger& h) {
  int m = 0;
  CyclotomicInteger y = g;
  while (auto next = exact_divide(y, h)) {
    y = *next;
    ++m;
  }
  return m;
}

}  // namespace

TEST_CASE("prime_divisors_of") {
  const auto d11 = prime_divisors_of(11, 5);
  REQUIRE(d11.size() == 4);
  std::set<long> xis;
  for (const auto& p : d11) {
    CHECK(p.kind() == IdealPrimeDivisor::Kind::General);
    CHECK(p.f() == 1);
    xis.insert(p.xi().get_si());
  }
  CHECK(xis == std::set<long>{3, 4, 5, 9});
  for (std::size_t s = 0; s < d11.size(); ++s) CHECK(d11[s].shift() == static_cast<int>(s));

  const auto d2 = prime_divisors_of(2, 5);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].f() == 4);
  CHECK(d2[0].e() == 1);

  const auto d5 = prime_divisors_of(5, 5);
  REQUIRE(d5.size() == 1);
  CHECK(d5[0].kind() == IdealPrimeDivisor::Kind::Lambda);

  CHECK_THROWS_AS(prime_divisors_of(15, 5), InputError);
  CHECK_THROWS_AS(prime_divisors_of(7, 4), InputError);
}

TEST_CASE("divisor invariants") {
  for (int lambda : {3, 5, 7, 11}) {
    for (long q : testing::small_primes(60)) {
      const auto all = prime_divisors_of(q, lambda);
      if (q == lambda) {
        CHECK(all.size() == 1);
        continue;
      }
      CHECK(static_cast<int>(all.size()) == all.front().e());
      for (const auto& p : all) {
        CHECK(is_valid_assignment(p.assignment().system, p.u_tuple()));
        if (p.f() == 1) {
          CHECK(pow_mod(p.xi(), lambda, q) == 1);
          CHECK(p.xi() != 1);
        }
      }
    }
  }
}

TEST_CASE("divides") {
  const auto p9 = by_xi(11, 5, 9);
  CHECK(divides(p9, from_ints(5, {2, 1, 0, 0, 0})));
  const auto p19 = prime_divisors_of(19, 5)[0];
  CHECK(p19.u_tuple() == std::vector<mpz_class>{4, 14});
  CHECK_FALSE(divides(p19, from_ints(5, {0, 0, 1, 0, 0})));
  const auto lam = prime_divisors_of(5, 5)[0];
  CHECK(divides(lam, from_ints(5, {1, -1, 0, 0, 0})));
  CHECK(divides(p9, CyclotomicInteger::zero(5)));
  CHECK(divides(p19, CyclotomicInteger::zero(5)));
  CHECK_THROWS_AS(divides(p9, CyclotomicInteger::one(7)), InputError);
}

TEST_CASE("divides_def1") {
  const auto p9 = by_xi(11, 5, 9);
  CHECK(divides_def1(p9, from_ints(5, {2, 1, 0, 0, 0}) * from_ints(5, {1, 1, 0, 0, 0})));
  CHECK_FALSE(divides_def1(p9, from_ints(5, {1, 1, 0, 0, 0})));
  CHECK(divides_def1(by_xi(11, 5, 3), CyclotomicInteger::from_integer(5, 11)));
  CHECK(divides_def1(prime_divisors_of(5, 5)[0], from_ints(5, {1, -1, 0, 0, 0})));
  CHECK_THROWS_AS(divides_def1(prime_divisors_of(19, 5)[0], CyclotomicInteger::one(5)), InputError);
}

TEST_CASE("psi_multiplier") {
  const auto d19 = prime_divisors_of(19, 5);
  const auto psi = psi_multiplier(d19[0]);
  // eta_0 - 14
  CHECK(psi == d19[0].assignment().system.period(0) - CyclotomicInteger::from_integer(5, 14));
  const auto phis = represent_in_period_basis(psi, d19[0].assignment().system);
  CHECK(evaluate_period_element(phis[0], d19[0].assignment(), 0) == 9);
  CHECK(evaluate_period_element(phis[0], d19[0].assignment(), 1) == 0);
  CHECK_FALSE(divides(d19[0], psi));
  CHECK(divides(d19[1], psi));

  CHECK(psi_multiplier(prime_divisors_of(2, 5)[0]) == CyclotomicInteger::one(5));

  const auto p9 = by_xi(11, 5, 9);
  const auto psi9 = psi_multiplier(p9);
  CHECK(evaluate_mod(psi9, 9, 11) != 0);
  for (long xi : {3, 4, 5}) CHECK(evaluate_mod(psi9, xi, 11) == 0);

  CHECK_THROWS_AS(psi_multiplier(prime_divisors_of(5, 5)[0]), InputError);
}

TEST_CASE("valuation examples") {
  const auto g = from_ints(5, {2, 1, 0, 0, 0});
  CHECK(valuation(by_xi(11, 5, 9), g * g) == 2);
  CHECK(oracle_valuation(g * g, g) == 2);
  CHECK(valuation(prime_divisors_of(5, 5)[0], CyclotomicInteger::from_integer(5, 5)) == 4);
  CHECK(valuation(by_xi(11, 5, 3), g) == 0);
  CHECK_THROWS_AS(valuation(by_xi(11, 5, 3), CyclotomicInteger::zero(5)), InputError);
}

TEST_CASE("valuation agrees with repeated division by an actual prime") {
  std::mt19937_64 rng(123);
  const struct {
    int lambda;
    long q;
  } cases[] = {{5, 11}, {5, 31}, {7, 29}, {7, 13}, {7, 2}, {3, 7}};
  for (const auto& c : cases) {
    for (const auto& p : prime_divisors_of(c.q, c.lambda)) {
      const auto found = search_generator_serial(p, {3, 3, 1'000'000});
      REQUIRE(found.generator.has_value());
      const auto& h = *found.generator;
      for (int t = 0; t < 15; ++t) {
        auto g = testing::random_nonzero(rng, c.lambda, 4);
        const int k = t % 3;
        for (int i = 0; i < k; ++i) g = g * h;
        CHECK(valuation(p, g) == oracle_valuation(g, h));
      }
    }
  }
}

TEST_CASE("factor") {
  const auto f1 = factor(from_ints(5, {2, 1, 0, 0, 0}));
  CHECK(f1.norm == 11);
  REQUIRE(f1.entries.size() == 1);
  CHECK(f1.entries[0].divisor.q() == 11);
  CHECK(f1.entries[0].divisor.xi() == 9);
  CHECK(f1.entries[0].multiplicity == 1);

  const auto f11 = factor(CyclotomicInteger::from_integer(5, 11));
  CHECK(f11.entries.size() == 4);
  for (const auto& e : f11.entries) CHECK(e.multiplicity == 1);

  CHECK(factor(CyclotomicInteger::one(5)).entries.empty());
  CHECK(factor(CyclotomicInteger::alpha_power(7, 3)).entries.empty());
  CHECK(factor(CyclotomicInteger::from_integer(5, 5)).entries.at(0).multiplicity == 4);
  CHECK_THROWS_AS(factor(CyclotomicInteger::zero(5)), InputError);
}

TEST_CASE("primality law and valuation additivity") {
  std::mt19937_64 rng(8);
  for (long q : {2L, 5L, 11L, 19L, 29L, 31L}) {
    const auto divs = prime_divisors_of(q, 5);
    for (int t = 0; t < 25; ++t) {
      const auto g = testing::random_nonzero(rng, 5, 6);
      const auto h = testing::random_nonzero(rng, 5, 6);
      for (const auto& p : divs) {
        CHECK(divides(p, g * h) == (divides(p, g) || divides(p, h)));
        const int vg = valuation(p, g), vh = valuation(p, h);
        CHECK(valuation(p, g * h) == vg + vh);
        CHECK(divides(p, g) == (vg >= 1));
      }
    }
  }
}

TEST_CASE("definition 1 and definition 2 agree") {
  std::mt19937_64 rng(19);
  for (int lambda : {3, 5, 7}) {
    for (long q : testing::small_primes(120)) {
      if (q % lambda != 1) continue;
      for (const auto& p : prime_divisors_of(q, lambda))
        for (int t = 0; t < 10; ++t) {
          const auto g = testing::random_cyclotomic(rng, lambda, 8);
          CHECK(divides_def1(p, g) == divides(p, g));
        }
    }
  }
}

TEST_CASE("norm reconstruction") {
  std::mt19937_64 rng(31);
  for (int lambda : {3, 5, 7, 11}) {
    for (int t = 0; t < 15; ++t) {
      const auto g = testing::random_nonzero(rng, lambda, 5);
      const auto fac = factor(g);
      mpz_class rebuilt = 1;
      for (const auto& e : fac.entries) rebuilt *= ipow(e.divisor.q(), static_cast<unsigned long>(e.divisor.f() * e.multiplicity));
      CHECK(rebuilt == abs(norm(g)));
      CHECK(fac.unit_norm_residual == 1);
    }
  }
}

TEST_CASE("conjugation equivariance") {
  std::mt19937_64 rng(55);
  for (int lambda : {5, 7}) {
    for (long q : {2L, 11L, 13L, 29L}) {
      if (q == lambda) continue;
      const auto divs = prime_divisors_of(q, lambda);
      const int gamma = divs.front().assignment().system.gamma;
      for (int t = 0; t < 10; ++t) {
        const auto g = testing::random_cyclotomic(rng, lambda, 5);
        for (const auto& p : divs)
          for (int c = 0; c < 3; ++c) {
            long gc = 1;
            for (int i = 0; i < c; ++i) gc = gc * gamma % lambda;
            CHECK(divides(p.conjugated(c), conjugate(g, gc)) == divides(p, g));
          }
      }
    }
  }
}

TEST_CASE("actual-factor consistency") {
  std::mt19937_64 rng(66);
  // 2 + a has norm 11; 1 + a + a^3 has norm 8 = 2^3 for lambda = 7 (f = 3)
  const CyclotomicInteger actual[] = {from_ints(5, {2, 1, 0, 0, 0}), from_ints(7, {1, 1, 0, 1, 0, 0, 0})};
  for (const auto& h : actual) {
    const int lambda = h.lambda();
    const auto fac = factor(h);
    REQUIRE(fac.entries.size() == 1);
    REQUIRE(fac.entries[0].multiplicity == 1);
    const auto& p = fac.entries[0].divisor;
    CHECK(abs(norm(h)) == ipow(p.q(), static_cast<unsigned long>(p.f())));
    int hits = 0;
    for (int t = 0; t < 200; ++t) {
      auto g = testing::random_cyclotomic(rng, lambda, 5);
      if (t % 4 == 0) g = g * h;
      const bool d = divides(p, g);
      hits += d;
      CHECK(exact_divide(g, h).has_value() == d);
    }
    CHECK(hits >= 50);
  }
}

TEST_CASE("repeated roots: lambda = 13, q = 3") {
  const auto divs = prime_divisors_of(3, 13);
  REQUIRE(divs.size() == 4);
  for (const auto& p : divs) {
    const auto psi = psi_multiplier(p);
    CHECK_FALSE(divides(p, psi));
  }
  CHECK(valuation(divs[0], CyclotomicInteger::from_integer(13, 9)) == 2);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::random_nonzero(rng, 13, 3);
    const auto h = testing::random_nonzero(rng, 13, 3);
    for (const auto& p : divs) CHECK(valuation(p, g * h) == valuation(p, g) + valuation(p, h));
    const auto fac = factor(g * CyclotomicInteger::from_integer(13, 3));
    mpz_class rebuilt = 1;
    for (const auto& e : fac.entries) rebuilt *= ipow(e.divisor.q(), static_cast<unsigned long>(e.divisor.f() * e.multiplicity));
    CHECK(rebuilt == abs(fac.norm));
  }
}
