#include "kummer/oracle.hpp"

#include "kummer/errors.hpp"
#include "kummer/integer.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <utility>

namespace kummer {

CyclotomicInteger Candidate::materialize(int lambda) const {
  std::vector<mpz_class> raw(static_cast<std::size_t>(lambda));
  for (int i = 0; i < size; ++i) raw[static_cast<std::size_t>(pos[i])] = val[i];
  return CyclotomicInteger::canonicalize(lambda, std::move(raw));
}

namespace {

void validate_budget(const SearchBudget& budget) {
  require(budget.max_support >= 1 && budget.max_support <= kMaxSupport,
          "max support must be in [1, " + std::to_string(kMaxSupport) + "]");
  require(budget.coeff_bound >= 1 && budget.coeff_bound <= 10000, "coefficient bound must be in [1, 10000]");
  require(budget.max_candidates >= 1, "max candidates must be positive");
}

// Odometer over the candidate order. Alphabet index i encodes the value
// (i/2 + 1) * (i odd ? -1 : 1), so indices run 1,-1,2,-2,...
class CandidateCursor {
 public:
  CandidateCursor(int lambda, const SearchBudget& budget)
      : n_(lambda - 1), max_s_(std::min(budget.max_support, lambda - 1)), max_b_(budget.coeff_bound) {
    start_block();
  }

  bool next(Candidate& out) {
    while (!done_) {
      if (!started_) {
        started_ = true;
      } else if (!advance()) {
        continue;
      }
      if (!valid()) continue;
      out.size = s_;
      for (int i = 0; i < s_; ++i) {
        out.pos[i] = static_cast<std::int16_t>(comb_[i]);
        out.val[i] = static_cast<std::int16_t>((digits_[i] / 2 + 1) * (digits_[i] % 2 ? -1 : 1));
      }
      return true;
    }
    return false;
  }

 private:
  void start_block() {
    if (s_ > max_s_ || s_ > n_) {
      done_ = true;
      return;
    }
    comb_.resize(static_cast<std::size_t>(s_));
    for (int i = 0; i < s_; ++i) comb_[i] = i;
    digits_.assign(static_cast<std::size_t>(s_), 0);
    started_ = false;
  }

  // Some digit must sit on magnitude b.
  bool valid() const {
    for (int d : digits_)
      if (d >= 2 * b_ - 2) return true;
    return false;
  }

  // Returns false when a new block was opened (its first state is pending).
  bool advance() {
    for (int i = s_ - 1; i >= 0; --i) {
      if (++digits_[i] < 2 * b_) return true;
      digits_[i] = 0;
    }
    for (int i = s_ - 1; i >= 0; --i) {
      if (comb_[i] < n_ - s_ + i) {
        ++comb_[i];
        for (int j = i + 1; j < s_; ++j) comb_[j] = comb_[j - 1] + 1;
        return true;
      }
    }
    if (++b_ > max_b_) {
      b_ = 1;
      ++s_;
    }
    start_block();
    return false;
  }

  int n_, max_s_, max_b_;
  int s_ = 1, b_ = 1;
  bool done_ = false;
  bool started_ = false;
  std::vector<int> comb_;
  std::vector<int> digits_;
};

}  // namespace

mpz_class candidate_space_size(int lambda, const SearchBudget& budget) {
  validate_budget(budget);
  mpz_class total = 0;
  for (int s = 1; s <= std::min(budget.max_support, lambda - 1); ++s) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(lambda - 1), static_cast<unsigned long>(s));
    total += c * ipow(2 * budget.coeff_bound, static_cast<unsigned long>(s));
  }
  return total;
}

std::vector<Candidate> enumerate_candidates(int lambda, const SearchBudget& budget, std::uint64_t limit) {
  validate_budget(budget);
  CandidateCursor cur(lambda, budget);
  std::vector<Candidate> out;
  Candidate c;
  while (out.size() < limit && cur.next(c)) out.push_back(c);
  return out;
}

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Exhausted: return "exhausted";
    case SearchOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

bool generates(const IdealPrimeDivisor& p, const CyclotomicInteger& h) {
  if (h.is_zero() || !divides(p, h)) return false;
  if (abs(norm(h)) != ipow(p.q(), static_cast<unsigned long>(p.f()))) return false;
  return valuation(p, h) == 1;
}

namespace {

SearchResult finish(SearchResult r, const IdealPrimeDivisor& p, const SearchBudget& budget, std::uint64_t enumerated,
                    std::optional<std::pair<std::uint64_t, Candidate>> hit) {
  r.enumerated = enumerated;
  if (hit) {
    r.outcome = SearchOutcome::Found;
    r.index = hit->first;
    r.generator = hit->second.materialize(p.lambda());
  } else {
    r.outcome = r.space_size > budget.max_candidates ? SearchOutcome::BudgetExceeded : SearchOutcome::Exhausted;
  }
  return r;
}

SearchResult start(const IdealPrimeDivisor& p, const SearchBudget& budget, std::uint64_t& limit) {
  require(p.kind() == IdealPrimeDivisor::Kind::General, "generator search needs a divisor of q != lambda");
  SearchResult r;
  r.space_size = candidate_space_size(p.lambda(), budget);
  limit = budget.max_candidates;
  if (r.space_size < budget.max_candidates) limit = r.space_size.get_ui();
  return r;
}

}  // namespace

SearchResult search_generator_serial(const IdealPrimeDivisor& p, const SearchBudget& budget) {
  std::uint64_t limit = 0;
  SearchResult r = start(p, budget, limit);
  CandidateCursor cur(p.lambda(), budget);
  Candidate c;
  std::uint64_t i = 0;
  for (; i < limit && cur.next(c); ++i)
    if (generates(p, c.materialize(p.lambda()))) return finish(std::move(r), p, budget, i + 1, std::make_pair(i, c));
  return finish(std::move(r), p, budget, i, std::nullopt);
}

SearchResult search_generator(const IdealPrimeDivisor& p, const SearchBudget& budget) {
  std::uint64_t limit = 0;
  SearchResult r = start(p, budget, limit);
  CandidateCursor cur(p.lambda(), budget);
  constexpr std::size_t kChunk = 1 << 14;
  std::vector<Candidate> chunk;
  chunk.reserve(kChunk);
  std::uint64_t base = 0;
  while (base < limit) {
    chunk.clear();
    Candidate c;
    while (chunk.size() < kChunk && base + chunk.size() < limit && cur.next(c)) chunk.push_back(c);
    if (chunk.empty()) break;

    // An index is skipped only when a lower one already hit, so the winner
    // is the lowest generating index, as in the serial scan.
    const auto n = static_cast<long long>(chunk.size());
    std::atomic<long long> best{std::numeric_limits<long long>::max()};
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      try {
        if (generates(p, chunk[static_cast<std::size_t>(i)].materialize(p.lambda()))) {
          long long cur_best = best.load();
          while (i < cur_best && !best.compare_exchange_weak(cur_best, i)) {
          }
        }
      } catch (...) {
#pragma omp critical(kummer_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    if (best.load() != std::numeric_limits<long long>::max()) {
      const auto i = static_cast<std::size_t>(best.load());
      return finish(std::move(r), p, budget, base + i + 1, std::make_pair(base + i, chunk[i]));
    }
    base += chunk.size();
  }
  return finish(std::move(r), p, budget, base, std::nullopt);
}

}  // namespace kummer
