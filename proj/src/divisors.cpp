#include "kummer/divisors.hpp"

#include "kummer/errors.hpp"
#include "kummer/integer.hpp"
#include "kummer/oracle.hpp"

#include <map>
#include <mutex>

namespace kummer {

namespace {

// Solves sum_j c_j u_{(j+t) mod e} = [t == shift] (mod q) for all t. The
// periods are a normal integral basis and q is unramified, so the e maps are
// independent over F_q and the system is regular.
PeriodElement period_idempotent(const CongruenceAssignment& a, int shift) {
  const int e = a.system.e;
  const mpz_class& q = a.system.q;
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(e), std::vector<mpz_class>(static_cast<std::size_t>(e + 1)));
  for (int t = 0; t < e; ++t) {
    for (int j = 0; j < e; ++j) m[t][j] = a.u[static_cast<std::size_t>((j + t) % e)];
    m[t][e] = t == shift ? 1 : 0;
  }
  for (int col = 0; col < e; ++col) {
    int piv = col;
    while (piv < e && m[piv][col] == 0) ++piv;
    ensure(piv < e, "period evaluation maps are dependent mod q");
    std::swap(m[piv], m[col]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), m[col][col].get_mpz_t(), q.get_mpz_t());
    for (auto& x : m[col]) x = mod_floor(x * inv, q);
    for (int r = 0; r < e; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpz_class k = m[r][col];
      for (int c = col; c <= e; ++c) m[r][c] = mod_floor(m[r][c] - k * m[col][c], q);
    }
  }
  PeriodElement out;
  for (int j = 0; j < e; ++j) out.coords.push_back(m[j][e]);
  return out;
}

}  // namespace

IdealPrimeDivisor IdealPrimeDivisor::lambda_divisor(int lambda) {
  require_valid_lambda(lambda);
  IdealPrimeDivisor p;
  p.kind_ = Kind::Lambda;
  p.lambda_ = lambda;
  p.q_ = lambda;
  return p;
}

IdealPrimeDivisor IdealPrimeDivisor::general(std::shared_ptr<const CongruenceAssignment> assignment, int shift) {
  require(assignment != nullptr, "divisor needs an assignment");
  require(shift >= 0 && shift < assignment->system.e, "shift out of range");
  IdealPrimeDivisor p;
  p.kind_ = Kind::General;
  p.lambda_ = assignment->system.lambda;
  p.q_ = assignment->system.q;
  p.shift_ = shift;
  p.assignment_ = std::move(assignment);
  return p;
}

int IdealPrimeDivisor::f() const { return kind_ == Kind::Lambda ? 1 : assignment_->system.f; }
int IdealPrimeDivisor::e() const { return kind_ == Kind::Lambda ? 1 : assignment_->system.e; }

const CongruenceAssignment& IdealPrimeDivisor::assignment() const {
  require(kind_ == Kind::General, "the lambda divisor has no congruence assignment");
  return *assignment_;
}

std::vector<mpz_class> IdealPrimeDivisor::u_tuple() const {
  if (kind_ == Kind::Lambda) return {};
  const auto& u = assignment_->u;
  std::vector<mpz_class> out;
  for (std::size_t j = 0; j < u.size(); ++j) out.push_back(u[(j + static_cast<std::size_t>(shift_)) % u.size()]);
  return out;
}

mpz_class IdealPrimeDivisor::xi() const {
  if (kind_ == Kind::Lambda) return 1;
  require(f() == 1, "xi is only defined for f = 1");
  // With f = 1 each coset is {gamma^j} and coset 0 is {1}, so eta_0 = alpha.
  return assignment_->u[static_cast<std::size_t>(shift_)];
}

IdealPrimeDivisor IdealPrimeDivisor::conjugated(int c) const {
  if (kind_ == Kind::Lambda) return *this;
  const int e_ = e();
  return general(assignment_, ((shift_ - c) % e_ + e_) % e_);
}

std::string IdealPrimeDivisor::label() const {
  const std::string head = "P(" + std::to_string(lambda_) + "; q=" + q_.get_str();
  if (kind_ == Kind::Lambda) return head + "; 1-a)";
  if (f() == 1) return head + "; xi=" + xi().get_str() + ")";
  std::string s = head + "; u=(";
  const auto u = u_tuple();
  for (std::size_t j = 0; j < u.size(); ++j) s += (j ? "," : "") + u[j].get_str();
  return s + "))";
}

std::vector<IdealPrimeDivisor> prime_divisors_of(const mpz_class& q, int lambda) {
  require_valid_lambda(lambda);
  require(is_prime(q), "q must be prime, got " + q.get_str());
  if (q == lambda) return {IdealPrimeDivisor::lambda_divisor(lambda)};

  static std::mutex mu;
  static std::map<std::pair<int, mpz_class>, std::vector<IdealPrimeDivisor>> memo;
  const auto key = std::make_pair(lambda, q);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto assignment = std::make_shared<const CongruenceAssignment>(congruence_assignment(period_system(lambda, q)));
  std::vector<IdealPrimeDivisor> out;
  for (int s = 0; s < assignment->system.e; ++s) out.push_back(IdealPrimeDivisor::general(assignment, s));
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(out)).first->second;
}

bool divides(const IdealPrimeDivisor& p, const CyclotomicInteger& g) {
  require(g.lambda() == p.lambda(), "mismatched lambda");
  if (p.kind() == IdealPrimeDivisor::Kind::Lambda) return evaluate_mod(g, 1, p.lambda()) == 0;
  const auto& a = p.assignment();
  for (const auto& phi : represent_in_period_basis(g, a.system))
    if (evaluate_period_element(phi, a, p.shift()) != 0) return false;
  return true;
}

bool divides_def1(const IdealPrimeDivisor& p, const CyclotomicInteger& g) {
  require(g.lambda() == p.lambda(), "mismatched lambda");
  require(p.f() == 1, "substitution test needs f = 1");
  return evaluate_mod(g, p.xi(), p.q()) == 0;
}

CyclotomicInteger psi_multiplier(const IdealPrimeDivisor& p) {
  require(p.kind() == IdealPrimeDivisor::Kind::General, "psi is defined for q != lambda");
  const auto& a = p.assignment();
  const int e = a.system.e;
  bool distinct = true;
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j) distinct = distinct && a.u[i] != a.u[j];

  CyclotomicInteger psi = CyclotomicInteger::one(p.lambda());
  if (distinct) {
    const CyclotomicInteger eta0 = a.system.period(0);
    for (int c = 1; c < e; ++c) {
      const auto& u = a.u[static_cast<std::size_t>((p.shift() + c) % e)];
      psi = psi * (eta0 - CyclotomicInteger::from_integer(p.lambda(), u));
    }
  } else {
    // repeated roots: the product would also vanish under p
    psi = to_cyclotomic(period_idempotent(a, p.shift()), a.system);
  }
  ensure(!divides(p, psi), "psi lies in its own divisor");
  for (int s = 0; s < e; ++s)
    if (s != p.shift()) ensure(divides(IdealPrimeDivisor::general(p.assignment_ptr(), s), psi), "psi misses a conjugate divisor");
  return psi;
}

int valuation(const IdealPrimeDivisor& p, const CyclotomicInteger& g) {
  require(g.lambda() == p.lambda(), "mismatched lambda");
  require(!g.is_zero(), "valuation of zero is infinite");

  // nu <= v_q(norm(g)) / f
  mpz_class n = abs(norm(g));
  mpz_class rest;
  const auto vq = static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.q().get_mpz_t()));
  const int cap = vq / p.f();

  int m = 0;
  if (p.kind() == IdealPrimeDivisor::Kind::Lambda) {
    const CyclotomicInteger pi = CyclotomicInteger::one(p.lambda()) - CyclotomicInteger::alpha_power(p.lambda(), 1);
    CyclotomicInteger y = g;
    while (auto next = exact_divide(y, pi)) {
      y = std::move(*next);
      ensure(++m <= cap, "lambda valuation exceeds the norm bound");
    }
    return m;
  }

  // g * psi^m is divisible by q^m exactly while m <= nu.
  const CyclotomicInteger psi = psi_multiplier(p);
  CyclotomicInteger y = g;
  while (true) {
    y = y * psi;
    if (!y.all_divisible_by(p.q())) break;
    y = y.divexact(p.q());
    ensure(++m <= cap, "valuation exceeds the norm bound");
  }
  return m;
}

DivisorFactorization factor(const CyclotomicInteger& g) {
  require(!g.is_zero(), "cannot factor zero");
  DivisorFactorization out{g, norm(g), {}, 1};
  out.unit_norm_residual = sgn(out.norm) < 0 ? -1 : 1;
  const mpz_class n = abs(out.norm);
  if (n == 1) return out;

  mpz_class rebuilt = 1;
  for (const auto& [q, k] : factor_integer(n)) {
    (void)k;
    for (const auto& p : prime_divisors_of(q, g.lambda())) {
      const int nu = valuation(p, g);
      if (nu == 0) continue;
      rebuilt *= ipow(q, static_cast<unsigned long>(p.f() * nu));
      out.entries.push_back({p, nu});
    }
  }
  ensure(rebuilt == n, "norm reconstruction failed: " + rebuilt.get_str() + " != " + n.get_str());
  return out;
}

}  // namespace kummer
