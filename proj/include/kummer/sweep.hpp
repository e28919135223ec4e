#pragma once

#include "kummer/oracle.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace kummer {

struct SweepDivisor {
  int shift = 0;
  std::optional<mpz_class> xi;  // f = 1 only
  std::string status;           // found / exhausted / budget-exceeded / known
  std::optional<CyclotomicInteger> generator;
};

/// Divisor census for one rational prime.
struct SweepRow {
  mpz_class q;
  bool lambda_row = false;  // q == lambda, the divisor of 1 - alpha
  int f = 1;
  int e = 1;
  std::vector<mpz_class> u;
  std::vector<SweepDivisor> divisors;
  bool all_found() const;
};

/// Rows for every prime q <= q_max, in increasing q. Rows are computed in
/// parallel; the result does not depend on the thread count.
std::vector<SweepRow> sweep_table(int lambda, long q_max, const SearchBudget& budget);
std::vector<SweepRow> sweep_table_serial(int lambda, long q_max, const SearchBudget& budget);

std::string format_sweep_text(int lambda, const SearchBudget& budget, const std::vector<SweepRow>& rows);
/// One JSON object per line.
std::string format_sweep_jsonl(int lambda, const SearchBudget& budget, const std::vector<SweepRow>& rows);

}  // namespace kummer
