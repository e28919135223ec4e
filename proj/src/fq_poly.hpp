#pragma once

// Dense univariate polynomials over F_q, q prime. Coefficients low to high,
// reduced into [0, q), no trailing zeros (the zero polynomial is empty).

#include <gmpxx.h>

#include <vector>

namespace kummer::fq {

using Poly = std::vector<mpz_class>;

class Field {
 public:
  explicit Field(mpz_class q) : q_(std::move(q)) {}
  const mpz_class& modulus() const { return q_; }

  Poly normalize(Poly p) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  // a = quot * b + rem, b != 0.
  void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) const;
  Poly rem(const Poly& a, const Poly& b) const;
  Poly monic(const Poly& a) const;
  Poly gcd(Poly a, Poly b) const;
  Poly powmod(const Poly& base, const mpz_class& exp, const Poly& m) const;
  mpz_class inverse(const mpz_class& a) const;

 private:
  mpz_class q_;
};

inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

// Finds one monic irreducible factor of degree `d` of a squarefree `f` all of
// whose irreducible factors have degree `d` (equal-degree factorization).
Poly equal_degree_factor(const Field& field, Poly f, int d);

}  // namespace kummer::fq
