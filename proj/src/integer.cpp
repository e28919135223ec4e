#include "kummer/integer.hpp"

#include "kummer/errors.hpp"

#include <string>

namespace kummer {

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, retrying with a new polynomial constant on failure.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    const unsigned long batch = 128;
    unsigned long r = 1;
    auto step = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      return mod_floor(t, n);
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < batch && i < r - k; ++i) {
          y = step(y);
          mpz_class d = x - y;
          q = mod_floor(q * abs(d), n);
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        mpz_class d = x - ys;
        g = gcd(abs(d), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, int> factor_integer(const mpz_class& n) {
  require(n != 0, "cannot factor zero");
  std::map<mpz_class, int> out;
  mpz_class m = abs(n);
  for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return out;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    char ch = s[i];
    ok = (ch >= '0' && ch <= '9') || (i == 0 && ch == '-' && s.size() > 1);
  }
  require(ok, "malformed integer '" + std::string(text) + "'");
  return mpz_class(s, 10);
}

}  // namespace kummer
