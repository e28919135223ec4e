#include "kummer/oracle.hpp"

#include "kummer/errors.hpp"
#include "kummer/integer.hpp"

#include <utility>

namespace kummer {

std::optional<CyclotomicInteger> exact_divide(const CyclotomicInteger& g, const CyclotomicInteger& h) {
  require(g.lambda() == h.lambda(), "mismatched lambda");
  require(!h.is_zero(), "division by zero");
  CyclotomicInteger cofactor = CyclotomicInteger::one(h.lambda());
  for (long k = 2; k < h.lambda(); ++k) cofactor = cofactor * conjugate(h, k);
  const CyclotomicInteger n = h * cofactor;
  ensure(n.is_rational(), "exact_divide: norm is not rational");
  const CyclotomicInteger num = g * cofactor;
  if (!num.all_divisible_by(n[0])) return std::nullopt;
  CyclotomicInteger quotient = num.divexact(n[0]);
  ensure(quotient * h == g, "exact_divide: quotient check failed");
  return quotient;
}

mpz_class norm_via_resultant(const CyclotomicInteger& g) {
  const int lambda = g.lambda();
  std::vector<mpz_class> b = g.coeffs();
  while (!b.empty() && b.back() == 0) b.pop_back();
  if (b.empty()) return 0;
  const int m = lambda - 1;                       // degree of Phi_lambda
  const int d = static_cast<int>(b.size()) - 1;   // degree of G
  if (d == 0) return ipow(b[0], static_cast<unsigned long>(m));

  // Sylvester matrix, coefficients highest degree first.
  const int size = m + d;
  std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(size), std::vector<mpz_class>(static_cast<std::size_t>(size)));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = 1;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= d; ++k) s[d + i][i + k] = b[static_cast<std::size_t>(d - k)];

  // Bareiss fraction-free elimination.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k] == 0) {
      int r = k + 1;
      while (r < size && s[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(s[k], s[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mpz_class t = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        mpz_divexact(s[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

std::vector<DivisorCheck> brute_force_divisor_check(const mpz_class& q, int lambda, const CyclotomicInteger& g,
                                                    const SearchBudget& budget) {
  require(q != lambda, "brute-force check needs q != lambda");
  require(g.lambda() == lambda, "mismatched lambda");
  std::vector<DivisorCheck> out;
  for (const auto& p : prime_divisors_of(q, lambda)) {
    DivisorCheck row{p, false, 0, false, true, std::nullopt, SearchOutcome::Exhausted};
    row.divides = divides(p, g);
    row.valuation = g.is_zero() ? -1 : valuation(p, g);
    const SearchResult sr = search_generator(p, budget);
    row.search = sr.outcome;
    if (sr.generator) {
      row.tested = true;
      row.generator = sr.generator;
      if (g.is_zero()) {
        row.agree = row.divides && exact_divide(g, *sr.generator).has_value();
      } else {
        // Oracle multiplicity: how often the actual generator divides g.
        int count = 0;
        CyclotomicInteger y = g;
        while (auto next = exact_divide(y, *sr.generator)) {
          y = std::move(*next);
          ++count;
        }
        row.agree = (count == row.valuation) && ((count > 0) == row.divides);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace kummer
