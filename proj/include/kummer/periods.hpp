#pragma once

#include "kummer/cyclotomic.hpp"

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace kummer {

/// Smallest positive primitive root modulo the prime lambda.
int primitive_root(int lambda);

/// Multiplicative order of q modulo lambda.
int multiplicative_order(const mpz_class& q, int lambda);

/// The e Gauss periods of f terms each attached to a rational prime q != lambda.
///
/// f is the order of q mod lambda, e*f = lambda-1, gamma the least primitive
/// root. Coset j holds the exponents gamma^(k*e+j) mod lambda for k = 1..f,
/// and the period eta_j is the sum of alpha^t over that coset, so that
/// conjugation by gamma sends eta_j to eta_{j+1 mod e}.
struct PeriodSystem {
  int lambda = 0;
  mpz_class q;
  int f = 0;
  int e = 0;
  int gamma = 0;
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_of;  // exponent t in [1, lambda) -> j; index 0 unused (-1)

  /// Inverse of the change of basis from {alpha^i eta_j} (i < f, j < e) to the
  /// canonical coordinates 1..alpha^(lambda-2). Unimodular, shared between copies.
  std::shared_ptr<const std::vector<std::vector<mpz_class>>> basis_inverse;

  CyclotomicInteger period(int j) const;
};

PeriodSystem period_system(int lambda, const mpz_class& q);

/// sum_j c_j eta_j. No separate constant: an integer c is -c * (eta_0 + ... + eta_{e-1}).
struct PeriodElement {
  std::vector<mpz_class> coords;
  friend bool operator==(const PeriodElement&, const PeriodElement&) = default;
};

CyclotomicInteger to_cyclotomic(const PeriodElement& phi, const PeriodSystem& ps);

/// Inverse of to_cyclotomic. Throws InputError if g is not in the period ring
/// (its coefficients are not constant on cosets).
PeriodElement to_period_element(const CyclotomicInteger& g, const PeriodSystem& ps);

/// Monic integer polynomial prod_j (x - eta_j), coefficients low to high.
std::vector<mpz_class> period_polynomial(const PeriodSystem& ps);

/// Residues u_j mod q such that eta_j -> u_j is a ring homomorphism Z[eta] -> F_q.
struct CongruenceAssignment {
  PeriodSystem system;
  std::vector<mpz_class> u;
};

/// The canonical assignment, rotated so that u_0 is the least residue. Its e
/// cyclic shifts are all the valid assignments.
CongruenceAssignment congruence_assignment(const PeriodSystem& ps);

/// Checks every defining property of an assignment: the u_j are the roots of
/// the period polynomial with multiplicity, the e cyclic shifts differ, and
/// the map is compatible with all products eta_i*eta_j. The u_j themselves
/// repeat when q <= e or q divides the discriminant.
bool is_valid_assignment(const PeriodSystem& ps, const std::vector<mpz_class>& u);

/// phi_0 ... phi_{f-1} with g = sum_i alpha^i phi_i(eta).
std::vector<PeriodElement> represent_in_period_basis(const CyclotomicInteger& g, const PeriodSystem& ps);

/// sum_j c_j u_{(j+shift) mod e} mod q.
mpz_class evaluate_period_element(const PeriodElement& phi, const CongruenceAssignment& a, int shift);

}  // namespace kummer
