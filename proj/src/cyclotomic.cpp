#include "kummer/cyclotomic.hpp"

#include "kummer/errors.hpp"
#include "kummer/integer.hpp"

#include <sstream>

namespace kummer {

namespace {

std::size_t idx(long i, int lambda) {
  long r = i % lambda;
  return static_cast<std::size_t>(r < 0 ? r + lambda : r);
}

void require_same_lambda(const CyclotomicInteger& g, const CyclotomicInteger& h) {
  require(g.lambda() == h.lambda(), "mismatched lambda: " + std::to_string(g.lambda()) +
                                        " vs " + std::to_string(h.lambda()));
}

}  // namespace

void require_valid_lambda(int lambda) {
  require(lambda >= 3 && is_prime(static_cast<long>(lambda)),
          "lambda must be a prime >= 3, got " + std::to_string(lambda));
}

CyclotomicInteger CyclotomicInteger::reduce(int lambda, std::vector<mpz_class> raw) {
  const mpz_class last = raw.back();
  if (last != 0)
    for (auto& a : raw) a -= last;
  return CyclotomicInteger(lambda, std::move(raw));
}

CyclotomicInteger CyclotomicInteger::canonicalize(int lambda, std::vector<mpz_class> raw) {
  require_valid_lambda(lambda);
  require(raw.size() == static_cast<std::size_t>(lambda),
          "expected " + std::to_string(lambda) + " coefficients, got " + std::to_string(raw.size()));
  return reduce(lambda, std::move(raw));
}

CyclotomicInteger CyclotomicInteger::from_integer(int lambda, const mpz_class& c) {
  require_valid_lambda(lambda);
  std::vector<mpz_class> v(static_cast<std::size_t>(lambda));
  v[0] = c;
  return CyclotomicInteger(lambda, std::move(v));
}

CyclotomicInteger CyclotomicInteger::alpha_power(int lambda, long k) {
  require_valid_lambda(lambda);
  std::vector<mpz_class> v(static_cast<std::size_t>(lambda));
  v[idx(k, lambda)] = 1;
  return reduce(lambda, std::move(v));
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& a : coeffs_)
    if (a != 0) return false;
  return true;
}

bool CyclotomicInteger::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CyclotomicInteger CyclotomicInteger::shifted(long k) const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[idx(static_cast<long>(i) + k, lambda_)] = coeffs_[i];
  return reduce(lambda_, std::move(v));
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return CyclotomicInteger(lambda_, std::move(v));
}

CyclotomicInteger operator+(const CyclotomicInteger& g, const CyclotomicInteger& h) {
  require_same_lambda(g, h);
  std::vector<mpz_class> v(g.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.coeffs_[i] + h.coeffs_[i];
  return CyclotomicInteger(g.lambda_, std::move(v));
}

CyclotomicInteger operator-(const CyclotomicInteger& g, const CyclotomicInteger& h) {
  require_same_lambda(g, h);
  std::vector<mpz_class> v(g.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.coeffs_[i] - h.coeffs_[i];
  return CyclotomicInteger(g.lambda_, std::move(v));
}

CyclotomicInteger operator*(const CyclotomicInteger& g, const CyclotomicInteger& h) {
  require_same_lambda(g, h);
  const auto n = g.coeffs_.size();
  std::vector<mpz_class> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (h.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(v[k].get_mpz_t(), g.coeffs_[i].get_mpz_t(), h.coeffs_[j].get_mpz_t());
    }
  }
  return CyclotomicInteger::reduce(g.lambda_, std::move(v));
}

CyclotomicInteger operator*(const mpz_class& c, const CyclotomicInteger& g) {
  std::vector<mpz_class> v(g.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * g.coeffs_[i];
  return CyclotomicInteger(g.lambda_, std::move(v));
}

bool CyclotomicInteger::all_divisible_by(const mpz_class& d) const {
  for (const auto& a : coeffs_)
    if (!divisible(a, d)) return false;
  return true;
}

CyclotomicInteger CyclotomicInteger::divexact(const mpz_class& d) const {
  ensure(d != 0 && all_divisible_by(d), "divexact: coefficients not divisible");
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  return CyclotomicInteger(lambda_, std::move(v));
}

CyclotomicInteger conjugate(const CyclotomicInteger& g, long k) {
  const int lambda = g.lambda();
  require(k % lambda != 0, "conjugate: exponent must be prime to lambda");
  std::vector<mpz_class> v(static_cast<std::size_t>(lambda));
  for (int i = 0; i < lambda; ++i) v[idx(static_cast<long>(i) * (k % lambda), lambda)] = g[i];
  return CyclotomicInteger::canonicalize(lambda, std::move(v));
}

mpz_class norm(const CyclotomicInteger& g) {
  CyclotomicInteger acc = g;
  for (long k = 2; k < g.lambda(); ++k) acc = acc * conjugate(g, k);
  ensure(acc.is_rational(), "norm: conjugate product is not rational");
  return acc[0];
}

mpz_class evaluate_mod(const CyclotomicInteger& g, const mpz_class& xi, const mpz_class& modulus) {
  require(modulus >= 2, "evaluate_mod: modulus must be >= 2");
  const mpz_class x = mod_floor(xi, modulus);
  mpz_class acc = 0;
  // Horner from the top coefficient.
  for (int i = g.lambda() - 1; i >= 0; --i) {
    acc = acc * x + g[i];
    acc = mod_floor(acc, modulus);
  }
  return acc;
}

CyclotomicInteger parse_cyclotomic(int lambda, std::string_view text) {
  require_valid_lambda(lambda);
  std::vector<mpz_class> raw;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    raw.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return CyclotomicInteger::canonicalize(lambda, std::move(raw));
}

std::string format_coeffs(const CyclotomicInteger& g) {
  std::string out;
  for (int i = 0; i < g.lambda(); ++i) {
    if (i) out += ',';
    out += g[i].get_str();
  }
  return out;
}

std::string format_polynomial(const CyclotomicInteger& g) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < g.lambda(); ++i) {
    const mpz_class& a = g[i];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << 'a';
    if (i > 1) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace kummer
