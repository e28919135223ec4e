#pragma once

// Brute-force oracles, independent of the period/congruence machinery, used
// to cross-check it: actual division, resultant norms, and bounded searches
// for actual elements generating an ideal divisor.

#include "kummer/cyclotomic.hpp"
#include "kummer/divisors.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kummer {

/// g / h when h divides g in Z[alpha]; nullopt otherwise. h != 0.
std::optional<CyclotomicInteger> exact_divide(const CyclotomicInteger& g, const CyclotomicInteger& h);

/// Res(Phi_lambda, G) as a Sylvester determinant (fraction-free Bareiss).
mpz_class norm_via_resultant(const CyclotomicInteger& g);

struct SearchBudget {
  int max_support = 3;
  int coeff_bound = 3;
  std::uint64_t max_candidates = 5'000'000;
};

inline constexpr int kMaxSupport = 8;

/// A sparse candidate: `size` nonzero coefficients at canonical positions.
struct Candidate {
  std::array<std::int16_t, kMaxSupport> pos{};
  std::array<std::int16_t, kMaxSupport> val{};
  int size = 0;
  CyclotomicInteger materialize(int lambda) const;
};

/// Total number of candidates the budget describes over positions 0..lambda-2
/// (support is capped at lambda-1, the number of positions).
mpz_class candidate_space_size(int lambda, const SearchBudget& budget);

/// Candidates in search order (support size, then max |coefficient|, then
/// lexicographic with values ordered 1,-1,2,-2,...), truncated at `limit`.
std::vector<Candidate> enumerate_candidates(int lambda, const SearchBudget& budget, std::uint64_t limit);

enum class SearchOutcome { Found, Exhausted, BudgetExceeded };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Exhausted;
  std::optional<CyclotomicInteger> generator;
  std::uint64_t index = 0;       // enumeration index of the generator
  std::uint64_t enumerated = 0;  // candidates materialized
  mpz_class space_size;
};

std::string to_string(SearchOutcome o);

/// True when h is an actual element generating exactly p: |norm(h)| = q^f and
/// valuation(p, h) = 1.
bool generates(const IdealPrimeDivisor& p, const CyclotomicInteger& h);

/// OpenMP search; returns the lowest-index generator, identical to the serial one.
SearchResult search_generator(const IdealPrimeDivisor& p, const SearchBudget& budget);
/// Reference implementation, single-threaded linear scan.
SearchResult search_generator_serial(const IdealPrimeDivisor& p, const SearchBudget& budget);

struct DivisorCheck {
  IdealPrimeDivisor divisor;
  bool divides = false;
  int valuation = 0;              // 0 when g = 0 is not meaningful; see tested
  bool tested = false;            // a generator was found, oracle comparison ran
  bool agree = true;
  std::optional<CyclotomicInteger> generator;
  SearchOutcome search = SearchOutcome::Exhausted;
};

/// For each divisor of q: the congruence test, and when a generator h is
/// found, whether exact division by h agrees with it.
std::vector<DivisorCheck> brute_force_divisor_check(const mpz_class& q, int lambda, const CyclotomicInteger& g,
                                                    const SearchBudget& budget = {});

}  // namespace kummer
