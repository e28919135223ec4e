#include "fq_poly.hpp"

#include "kummer/errors.hpp"
#include "kummer/integer.hpp"

namespace kummer::fq {

Poly Field::normalize(Poly p) const {
  for (auto& c : p) c = mod_floor(c, q_);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly Field::add(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return normalize(std::move(r));
}

Poly Field::sub(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return normalize(std::move(r));
}

Poly Field::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return normalize(std::move(r));
}

mpz_class Field::inverse(const mpz_class& a) const {
  mpz_class r;
  ensure(mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q_.get_mpz_t()) != 0, "fq: element not invertible");
  return r;
}

void Field::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) const {
  ensure(!b.empty(), "fq: division by zero polynomial");
  rem = a;
  if (a.size() < b.size()) {
    quot.clear();
    return;
  }
  quot.assign(a.size() - b.size() + 1, 0);
  const mpz_class lead_inv = inverse(b.back());
  for (long i = degree(rem); i >= degree(b); --i) {
    mpz_class c = mod_floor(rem[static_cast<std::size_t>(i)] * lead_inv, q_);
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(i - degree(b));
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[shift + j] = mod_floor(rem[shift + j] - c * b[j], q_);
  }
  quot = normalize(std::move(quot));
  rem = normalize(std::move(rem));
}

Poly Field::rem(const Poly& a, const Poly& b) const {
  Poly q, r;
  divmod(a, b, q, r);
  return r;
}

Poly Field::monic(const Poly& a) const {
  if (a.empty()) return a;
  const mpz_class inv = inverse(a.back());
  Poly r = a;
  for (auto& c : r) c *= inv;
  return normalize(std::move(r));
}

Poly Field::gcd(Poly a, Poly b) const {
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly Field::powmod(const Poly& base, const mpz_class& exp, const Poly& m) const {
  Poly result{1};
  result = rem(result, m);
  Poly b = rem(base, m);
  const auto bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (long i = static_cast<long>(bits) - 1; i >= 0; --i) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(exp.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = rem(mul(result, b), m);
  }
  return result;
}

Poly equal_degree_factor(const Field& field, Poly f, int d) {
  f = field.monic(field.normalize(std::move(f)));
  ensure(degree(f) >= d && degree(f) % d == 0, "equal_degree_factor: degree mismatch");
  const mpz_class& q = field.modulus();
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x6b756d6dUL);
  const bool odd = q != 2;
  mpz_class half_exp;
  if (odd) half_exp = (ipow(q, static_cast<unsigned long>(d)) - 1) / 2;

  int attempts = 0;
  while (degree(f) > d) {
    ensure(++attempts < 10000, "equal_degree_factor: no split found");
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = rng.get_z_range(q);
    a = field.normalize(std::move(a));
    if (degree(a) < 1) continue;

    Poly b;
    if (odd) {
      b = field.sub(field.powmod(a, half_exp, f), Poly{1});
    } else {
      // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
      Poly term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = field.rem(field.mul(term, term), f);
        b = field.add(b, term);
      }
    }
    Poly g = field.gcd(f, b);
    if (degree(g) < 1 || degree(g) == degree(f)) continue;
    Poly other, r;
    field.divmod(f, g, other, r);
    ensure(r.empty(), "equal_degree_factor: gcd does not divide");
    f = degree(g) <= degree(other) ? g : field.monic(other);
  }
  return f;
}

}  // namespace kummer::fq
