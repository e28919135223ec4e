#pragma once

#include "kummer/cyclotomic.hpp"
#include "kummer/periods.hpp"

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace kummer {

/// An ideal prime divisor of the rational prime q in Z[alpha].
///
/// For q = lambda there is one, the divisor of 1 - alpha. For q != lambda
/// there are e of them, one per cyclic shift of the canonical congruence
/// assignment: the divisor with shift s reads eta_j as u_{(j+s) mod e}.
class IdealPrimeDivisor {
 public:
  enum class Kind { Lambda, General };

  static IdealPrimeDivisor lambda_divisor(int lambda);
  static IdealPrimeDivisor general(std::shared_ptr<const CongruenceAssignment> assignment, int shift);

  Kind kind() const { return kind_; }
  int lambda() const { return lambda_; }
  const mpz_class& q() const { return q_; }
  int shift() const { return shift_; }
  int f() const;
  int e() const;
  const CongruenceAssignment& assignment() const;
  std::shared_ptr<const CongruenceAssignment> assignment_ptr() const { return assignment_; }
  /// Shifted tuple (u_s, u_{s+1}, ...).
  std::vector<mpz_class> u_tuple() const;
  /// For f = 1: the root xi of xi^lambda = 1 mod q with alpha -> xi. The
  /// lambda divisor reports xi = 1.
  mpz_class xi() const;

  /// Image under conjugation by gamma^c: divides(P.conjugated(c), conjugate(g, gamma^c)) == divides(P, g).
  IdealPrimeDivisor conjugated(int c) const;

  std::string label() const;

  friend bool operator==(const IdealPrimeDivisor& a, const IdealPrimeDivisor& b) {
    return a.kind_ == b.kind_ && a.lambda_ == b.lambda_ && a.q_ == b.q_ && a.shift_ == b.shift_;
  }

 private:
  IdealPrimeDivisor() = default;
  Kind kind_ = Kind::Lambda;
  int lambda_ = 0;
  mpz_class q_;
  int shift_ = 0;
  std::shared_ptr<const CongruenceAssignment> assignment_;
};

/// All divisors of q, ordered by shift. Memoized per (lambda, q).
std::vector<IdealPrimeDivisor> prime_divisors_of(const mpz_class& q, int lambda);

/// Congruence test on the period-basis representation (for q = lambda:
/// evaluation at alpha = 1 mod lambda). divides(P, 0) is true.
bool divides(const IdealPrimeDivisor& p, const CyclotomicInteger& g);

/// Substitution test alpha -> xi mod q. Only for f = 1 or the lambda divisor.
bool divides_def1(const IdealPrimeDivisor& p, const CyclotomicInteger& g);

/// An element lying in every conjugate of p but not in p: prod_{c=1}^{e-1}
/// (eta_0 - u_{shift+c}) when the u_j are distinct, otherwise the period
/// combination that is 1 under p and 0 under its conjugates.
CyclotomicInteger psi_multiplier(const IdealPrimeDivisor& p);

/// Multiplicity of p in g, g != 0.
int valuation(const IdealPrimeDivisor& p, const CyclotomicInteger& g);

struct FactorEntry {
  IdealPrimeDivisor divisor;
  int multiplicity;
};

struct DivisorFactorization {
  CyclotomicInteger subject;
  mpz_class norm;
  std::vector<FactorEntry> entries;  // ordered by q, then shift
  int unit_norm_residual = 1;        // sign of the norm
};

DivisorFactorization factor(const CyclotomicInteger& g);

}  // namespace kummer
