#include "kummer/periods.hpp"

#include "fq_poly.hpp"
#include "kummer/errors.hpp"
#include "kummer/integer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace kummer {

int primitive_root(int lambda) {
  require(lambda >= 2 && is_prime(static_cast<long>(lambda)), "primitive_root: modulus must be prime");
  if (lambda == 2) return 1;
  for (int g = 2; g < lambda; ++g)
    if (multiplicative_order(g, lambda) == lambda - 1) return g;
  throw ContractViolation("primitive_root: none found");
}

int multiplicative_order(const mpz_class& q, int lambda) {
  const long r = mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(lambda));
  require(r != 0, "multiplicative_order: q divisible by lambda");
  long x = r;
  int k = 1;
  while (x != 1) {
    x = x * r % lambda;
    ++k;
  }
  return k;
}

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

// Columns are alpha^i eta_j in canonical coordinates; returns the integer inverse.
std::shared_ptr<const Matrix> build_basis_inverse(const PeriodSystem& ps) {
  const int n = ps.lambda - 1;
  std::vector<std::vector<mpq_class>> aug(static_cast<std::size_t>(n),
                                          std::vector<mpq_class>(static_cast<std::size_t>(2 * n)));
  for (int i = 0; i < ps.f; ++i) {
    for (int j = 0; j < ps.e; ++j) {
      const CyclotomicInteger v = ps.period(j).shifted(i);
      const int col = i * ps.e + j;
      for (int r = 0; r < n; ++r) aug[r][col] = v[r];
    }
  }
  for (int r = 0; r < n; ++r) aug[r][n + r] = 1;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    ensure(pivot < n, "period basis is singular");
    std::swap(aug[pivot], aug[col]);
    const mpq_class inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const mpq_class factor = aug[r][col];
      for (int c = col; c < 2 * n; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }

  auto inv = std::make_shared<Matrix>(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const mpq_class& x = aug[r][n + c];
      ensure(x.get_den() == 1, "period basis is not unimodular");
      (*inv)[r][c] = x.get_num();
    }
  }
  return inv;
}

// The basis depends only on (lambda, f).
std::shared_ptr<const Matrix> cached_basis_inverse(const PeriodSystem& ps) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Matrix>> cache;
  const auto key = std::make_pair(ps.lambda, ps.f);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto inv = build_basis_inverse(ps);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(inv)).first->second;
}

}  // namespace

CyclotomicInteger PeriodSystem::period(int j) const {
  std::vector<mpz_class> raw(static_cast<std::size_t>(lambda));
  for (int t : cosets.at(static_cast<std::size_t>(j))) raw[static_cast<std::size_t>(t)] = 1;
  return CyclotomicInteger::canonicalize(lambda, std::move(raw));
}

PeriodSystem period_system(int lambda, const mpz_class& q) {
  require_valid_lambda(lambda);
  require(is_prime(q), "q must be prime, got " + q.get_str());
  require(q != lambda, "q = lambda has no period system; use the lambda divisor");

  PeriodSystem ps;
  ps.lambda = lambda;
  ps.q = q;
  ps.f = multiplicative_order(q, lambda);
  ps.e = (lambda - 1) / ps.f;
  ps.gamma = primitive_root(lambda);

  std::vector<int> pw(static_cast<std::size_t>(lambda));
  pw[0] = 1;
  for (int n = 1; n < lambda; ++n) pw[n] = pw[n - 1] * ps.gamma % lambda;

  ps.cosets.assign(static_cast<std::size_t>(ps.e), {});
  ps.coset_of.assign(static_cast<std::size_t>(lambda), -1);
  for (int j = 0; j < ps.e; ++j) {
    for (int k = 1; k <= ps.f; ++k) {
      const int t = pw[static_cast<std::size_t>((k * ps.e + j) % (lambda - 1))];
      ps.cosets[j].push_back(t);
      ps.coset_of[t] = j;
    }
  }
  ps.basis_inverse = cached_basis_inverse(ps);
  return ps;
}

CyclotomicInteger to_cyclotomic(const PeriodElement& phi, const PeriodSystem& ps) {
  require(phi.coords.size() == static_cast<std::size_t>(ps.e), "period element has wrong length");
  std::vector<mpz_class> raw(static_cast<std::size_t>(ps.lambda));
  for (int t = 1; t < ps.lambda; ++t) raw[t] = phi.coords[static_cast<std::size_t>(ps.coset_of[t])];
  return CyclotomicInteger::canonicalize(ps.lambda, std::move(raw));
}

PeriodElement to_period_element(const CyclotomicInteger& g, const PeriodSystem& ps) {
  require(g.lambda() == ps.lambda, "mismatched lambda");
  PeriodElement phi;
  phi.coords.resize(static_cast<std::size_t>(ps.e));
  std::vector<bool> seen(static_cast<std::size_t>(ps.e), false);
  for (int t = 1; t < ps.lambda; ++t) {
    const mpz_class d = g[t] - g[0];
    const auto j = static_cast<std::size_t>(ps.coset_of[t]);
    if (!seen[j]) {
      phi.coords[j] = d;
      seen[j] = true;
    } else {
      require(phi.coords[j] == d, "element is not in the period ring");
    }
  }
  return phi;
}

std::vector<mpz_class> period_polynomial(const PeriodSystem& ps) {
  std::vector<CyclotomicInteger> poly{CyclotomicInteger::one(ps.lambda)};
  for (int j = 0; j < ps.e; ++j) {
    const CyclotomicInteger eta = ps.period(j);
    std::vector<CyclotomicInteger> next(poly.size() + 1, CyclotomicInteger::zero(ps.lambda));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - eta * poly[k];
    }
    poly = std::move(next);
  }
  std::vector<mpz_class> out;
  for (const auto& c : poly) {
    ensure(c.is_rational(), "period polynomial has a non-rational coefficient");
    out.push_back(c[0]);
  }
  return out;
}

bool is_valid_assignment(const PeriodSystem& ps, const std::vector<mpz_class>& u) {
  if (u.size() != static_cast<std::size_t>(ps.e)) return false;
  const mpz_class& q = ps.q;
  mpz_class sum = 0;
  for (const auto& x : u) {
    if (x < 0 || x >= q) return false;
    sum += x;
  }
  if (mod_floor(sum + 1, q) != 0) return false;

  const auto poly = period_polynomial(ps);
  for (const auto& x : u) {
    mpz_class acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = mod_floor(acc * x + *it, q);
    if (acc != 0) return false;
  }
  // prod_j (x - u_j) must be the period polynomial itself, so repeated roots
  // appear with their multiplicity (q <= e forces repeats, e.g. lambda=13, q=3).
  std::vector<mpz_class> prod{1};
  for (const auto& x : u) {
    std::vector<mpz_class> next(prod.size() + 1, 0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] += prod[k];
      next[k] -= x * prod[k];
    }
    prod = std::move(next);
  }
  for (std::size_t k = 0; k < prod.size(); ++k)
    if (mod_floor(prod[k] - poly[k], q) != 0) return false;

  // the e shifts are the e distinct divisors over q
  for (int s = 1; s < ps.e; ++s)
    if (std::equal(u.begin(), u.end() - s, u.begin() + s) && std::equal(u.end() - s, u.end(), u.begin())) return false;

  CongruenceAssignment a{ps, u};
  for (int i = 0; i < ps.e; ++i) {
    for (int j = i; j < ps.e; ++j) {
      const PeriodElement prod = to_period_element(ps.period(i) * ps.period(j), ps);
      if (evaluate_period_element(prod, a, 0) != mod_floor(u[i] * u[j], q)) return false;
    }
  }
  return true;
}

CongruenceAssignment congruence_assignment(const PeriodSystem& ps) {
  const fq::Field field(ps.q);
  const fq::Poly cyclo(static_cast<std::size_t>(ps.lambda), mpz_class(1));
  const fq::Poly h = fq::equal_degree_factor(field, cyclo, ps.f);

  std::vector<mpz_class> u;
  for (const auto& coset : ps.cosets) {
    fq::Poly s(static_cast<std::size_t>(ps.lambda));
    for (int t : coset) s[static_cast<std::size_t>(t)] = 1;
    const fq::Poly r = field.rem(field.normalize(std::move(s)), h);
    ensure(fq::degree(r) <= 0, "period image in the residue field is not in F_q");
    u.push_back(r.empty() ? mpz_class(0) : r[0]);
  }
  // lexicographically least rotation, so the result does not depend on which
  // factor h the random splitting produced (u_0 is then the least residue)
  std::vector<mpz_class> best = u;
  for (std::size_t s = 1; s < u.size(); ++s) {
    std::vector<mpz_class> r = u;
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(s), r.end());
    if (r < best) best = std::move(r);
  }
  u = std::move(best);
  ensure(is_valid_assignment(ps, u), "congruence assignment failed validation");
  return {ps, std::move(u)};
}

std::vector<PeriodElement> represent_in_period_basis(const CyclotomicInteger& g, const PeriodSystem& ps) {
  require(g.lambda() == ps.lambda, "mismatched lambda");
  const auto& inv = *ps.basis_inverse;
  const int n = ps.lambda - 1;
  std::vector<PeriodElement> phis(static_cast<std::size_t>(ps.f));
  for (auto& phi : phis) phi.coords.resize(static_cast<std::size_t>(ps.e));
  for (int r = 0; r < n; ++r) {
    mpz_class x = 0;
    for (int c = 0; c < n; ++c)
      if (g[c] != 0) mpz_addmul(x.get_mpz_t(), inv[r][c].get_mpz_t(), g[c].get_mpz_t());
    phis[static_cast<std::size_t>(r / ps.e)].coords[static_cast<std::size_t>(r % ps.e)] = std::move(x);
  }

  CyclotomicInteger back = CyclotomicInteger::zero(ps.lambda);
  for (int i = 0; i < ps.f; ++i) back = back + to_cyclotomic(phis[i], ps).shifted(i);
  ensure(back == g, "period-basis reconstruction mismatch");
  return phis;
}

mpz_class evaluate_period_element(const PeriodElement& phi, const CongruenceAssignment& a, int shift) {
  const int e = a.system.e;
  require(shift >= 0 && shift < e, "shift out of range");
  require(phi.coords.size() == static_cast<std::size_t>(e), "period element has wrong length");
  mpz_class acc = 0;
  for (int j = 0; j < e; ++j)
    mpz_addmul(acc.get_mpz_t(), phi.coords[j].get_mpz_t(), a.u[static_cast<std::size_t>((j + shift) % e)].get_mpz_t());
  return mod_floor(acc, a.system.q);
}

}  // namespace kummer
