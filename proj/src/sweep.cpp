#include "kummer/sweep.hpp"

#include "kummer/errors.hpp"
#include "kummer/integer.hpp"
#include "kummer/json_io.hpp"

#include <omp.h>

#include <exception>
#include <sstream>

namespace kummer {

bool SweepRow::all_found() const {
  for (const auto& d : divisors)
    if (!d.generator) return false;
  return true;
}

namespace {

std::vector<long> primes_up_to(long q_max) {
  require(q_max >= 2, "q_max must be >= 2");
  std::vector<long> out;
  for (long q = 2; q <= q_max; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

SweepRow sweep_row(int lambda, long q, const SearchBudget& budget) {
  SweepRow row;
  row.q = q;
  if (q == lambda) {
    row.lambda_row = true;
    SweepDivisor d;
    d.status = "known";
    d.xi = mpz_class(1);
    d.generator = CyclotomicInteger::one(lambda) - CyclotomicInteger::alpha_power(lambda, 1);
    row.divisors.push_back(std::move(d));
    return row;
  }
  const auto divisors = prime_divisors_of(q, lambda);
  const auto& a = divisors.front().assignment();
  row.f = a.system.f;
  row.e = a.system.e;
  row.u = a.u;
  for (const auto& p : divisors) {
    SweepDivisor d;
    d.shift = p.shift();
    if (p.f() == 1) d.xi = p.xi();
    // Nested inside the row-parallel loop this runs on one thread.
    const SearchResult r = search_generator(p, budget);
    d.status = to_string(r.outcome);
    d.generator = r.generator;
    row.divisors.push_back(std::move(d));
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_table_serial(int lambda, long q_max, const SearchBudget& budget) {
  require_valid_lambda(lambda);
  std::vector<SweepRow> rows;
  for (long q : primes_up_to(q_max)) rows.push_back(sweep_row(lambda, q, budget));
  return rows;
}

std::vector<SweepRow> sweep_table(int lambda, long q_max, const SearchBudget& budget) {
  require_valid_lambda(lambda);
  const auto primes = primes_up_to(q_max);
  std::vector<SweepRow> rows(primes.size());
  std::exception_ptr failure;
  const auto n = static_cast<long>(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = sweep_row(lambda, primes[static_cast<std::size_t>(i)], budget);
    } catch (...) {
#pragma omp critical(kummer_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_sweep_text(int lambda, const SearchBudget& budget, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "# lambda=" << lambda << " budget: support<=" << budget.max_support << " |coeff|<=" << budget.coeff_bound
     << " candidates<=" << budget.max_candidates << "\n";
  os << "# q  f  e  u  generators\n";
  for (const auto& row : rows) {
    os << row.q.get_str() << "  ";
    if (row.lambda_row) {
      os << "special  1-a (actual)\n";
      continue;
    }
    os << row.f << "  " << row.e << "  (";
    for (std::size_t j = 0; j < row.u.size(); ++j) os << (j ? "," : "") << row.u[j].get_str();
    os << ")  ";
    std::size_t found = 0;
    for (const auto& d : row.divisors) found += d.generator ? 1 : 0;
    os << found << "/" << row.divisors.size() << " found";
    for (const auto& d : row.divisors) {
      os << "  [s=" << d.shift;
      if (d.xi) os << " xi=" << d.xi->get_str();
      os << ": " << (d.generator ? format_polynomial(*d.generator) : d.status) << "]";
    }
    if (!row.all_found()) os << "  bounded evidence only";
    os << "\n";
  }
  return os.str();
}

std::string format_sweep_jsonl(int lambda, const SearchBudget& budget, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    Json j;
    j["lambda"] = lambda;
    j["q"] = to_json(row.q);
    if (row.lambda_row) {
      j["special"] = true;
    } else {
      j["f"] = row.f;
      j["e"] = row.e;
      Json u = Json::array();
      for (const auto& x : row.u) u.push_back(to_json(x));
      j["u"] = std::move(u);
    }
    Json ds = Json::array();
    for (const auto& d : row.divisors) {
      Json dj;
      dj["shift"] = d.shift;
      if (d.xi) dj["xi"] = to_json(*d.xi);
      dj["status"] = d.status;
      dj["generator"] = d.generator ? coeffs_json(*d.generator) : Json(nullptr);
      ds.push_back(std::move(dj));
    }
    j["divisors"] = std::move(ds);
    j["allFound"] = row.all_found();
    j["evidence"] = row.all_found() ? Json(nullptr) : Json("bounded: no generator within budget, not a proof");
    j["budget"] = {{"support", budget.max_support}, {"bound", budget.coeff_bound}, {"maxCandidates", budget.max_candidates}};
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace kummer
