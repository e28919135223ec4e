#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kummer {

/// Element of Z[alpha], alpha a primitive lambda-th root of unity, lambda an
/// odd prime. Stored as lambda coefficients on 1, alpha, ..., alpha^(lambda-1)
/// in canonical form: the last coefficient is zero (using the vanishing sum
/// 1 + alpha + ... + alpha^(lambda-1) = 0), so equality is plain sequence
/// equality.
class CyclotomicInteger {
 public:
  /// Reduces an arbitrary coefficient vector of length lambda.
  /// Throws InputError if lambda is not a prime >= 3 or the length is wrong.
  static CyclotomicInteger canonicalize(int lambda, std::vector<mpz_class> raw);

  static CyclotomicInteger from_integer(int lambda, const mpz_class& c);
  static CyclotomicInteger zero(int lambda) { return from_integer(lambda, 0); }
  static CyclotomicInteger one(int lambda) { return from_integer(lambda, 1); }
  /// alpha^k, k taken mod lambda.
  static CyclotomicInteger alpha_power(int lambda, long k);

  int lambda() const { return lambda_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// True when the value lies in Z (only the constant coefficient is set).
  bool is_rational() const;

  /// Multiplication by alpha^k is a cyclic rotation of coefficients.
  CyclotomicInteger shifted(long k) const;

  CyclotomicInteger operator-() const;
  friend CyclotomicInteger operator+(const CyclotomicInteger& g, const CyclotomicInteger& h);
  friend CyclotomicInteger operator-(const CyclotomicInteger& g, const CyclotomicInteger& h);
  friend CyclotomicInteger operator*(const CyclotomicInteger& g, const CyclotomicInteger& h);
  friend CyclotomicInteger operator*(const mpz_class& c, const CyclotomicInteger& g);
  friend bool operator==(const CyclotomicInteger& g, const CyclotomicInteger& h) {
    return g.lambda_ == h.lambda_ && g.coeffs_ == h.coeffs_;
  }

  // Divides every coefficient by d; throws ContractViolation if any is not a
  // multiple.
  CyclotomicInteger divexact(const mpz_class& d) const;
  bool all_divisible_by(const mpz_class& d) const;

 private:
  CyclotomicInteger(int lambda, std::vector<mpz_class> canonical)
      : lambda_(lambda), coeffs_(std::move(canonical)) {}
  static CyclotomicInteger reduce(int lambda, std::vector<mpz_class> raw);

  int lambda_;
  std::vector<mpz_class> coeffs_;
};

void require_valid_lambda(int lambda);

/// Substitutes alpha -> alpha^k. Requires k not divisible by lambda.
CyclotomicInteger conjugate(const CyclotomicInteger& g, long k);

/// Product of the lambda-1 conjugates; a rational integer.
mpz_class norm(const CyclotomicInteger& g);

/// sum a_i xi^i reduced into [0, modulus). A ring homomorphism when xi is a
/// root of the lambda-th cyclotomic polynomial modulo the modulus.
mpz_class evaluate_mod(const CyclotomicInteger& g, const mpz_class& xi, const mpz_class& modulus);

/// "a0,a1,...,a_{lambda-1}" with exactly lambda entries.
CyclotomicInteger parse_cyclotomic(int lambda, std::string_view text);
std::string format_coeffs(const CyclotomicInteger& g);
/// Human-readable polynomial in alpha, e.g. "2 - a - a^4".
std::string format_polynomial(const CyclotomicInteger& g);

}  // namespace kummer
