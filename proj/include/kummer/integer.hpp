#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace kummer {

bool is_prime(const mpz_class& n);
bool is_prime(long n);

// Prime factorization of |n|, n != 0. Trial division followed by
// Pollard-Brent rho; primality via GMP's BPSW-based test.
std::map<mpz_class, int> factor_integer(const mpz_class& n);

// Least non-negative residue.
inline mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline mpz_class ipow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool divisible(const mpz_class& a, const mpz_class& d) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Parses a signed decimal integer; throws InputError on junk.
mpz_class parse_integer(std::string_view text);

}  // namespace kummer
