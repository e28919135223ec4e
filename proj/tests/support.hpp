#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// period or divisor machinery it is used to check.

#include "kummer/cyclotomic.hpp"

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace kummer::testing {

inline CyclotomicInteger random_cyclotomic(std::mt19937_64& rng, int lambda, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<mpz_class> raw(static_cast<std::size_t>(lambda));
  for (auto& a : raw) a = dist(rng);
  return CyclotomicInteger::canonicalize(lambda, std::move(raw));
}

inline CyclotomicInteger random_nonzero(std::mt19937_64& rng, int lambda, int bound) {
  while (true) {
    auto g = random_cyclotomic(rng, lambda, bound);
    if (!g.is_zero()) return g;
  }
}

inline CyclotomicInteger from_ints(int lambda, std::vector<long> v) {
  std::vector<mpz_class> raw;
  for (long x : v) raw.emplace_back(x);
  return CyclotomicInteger::canonicalize(lambda, std::move(raw));
}

inline std::vector<long> small_primes(long below) {
  std::vector<long> out;
  for (long n = 2; n < below; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d) prime = prime && (n % d != 0);
    if (prime) out.push_back(n);
  }
  return out;
}

// All x in [0, q) with x^lambda = 1 and x != 1, by enumeration.
inline std::vector<long> nontrivial_roots_of_unity(int lambda, long q) {
  std::vector<long> out;
  for (long x = 2; x < q; ++x) {
    long p = 1;
    for (int i = 0; i < lambda; ++i) p = p * x % q;
    if (p == 1) out.push_back(x);
  }
  return out;
}

// Floating product of g(zeta^k), k = 1..lambda-1; a sanity check only.
inline double numeric_norm(const CyclotomicInteger& g) {
  const int lambda = g.lambda();
  std::complex<double> prod = 1;
  for (int k = 1; k < lambda; ++k) {
    std::complex<double> v = 0;
    for (int i = 0; i < lambda; ++i)
      v += g[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * k * i / lambda);
    prod *= v;
  }
  return prod.real();
}

// Floating value of sum_{t in coset} zeta^t.
inline std::complex<double> numeric_period(int lambda, const std::vector<int>& coset) {
  std::complex<double> v = 0;
  for (int t : coset) v += std::polar(1.0, 2 * std::numbers::pi * t / lambda);
  return v;
}

}  // namespace kummer::testing
