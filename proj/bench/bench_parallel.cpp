// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include "kummer/divisors.hpp"
#include "kummer/oracle.hpp"
#include "kummer/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace kummer;

// lambda = 23, q = 47 at support 3 / bound 1 is an exhaustive scan of 13288
// candidates; lambda = 7, q = 11 at (4, 5) finds its generator near index 22430.
IdealPrimeDivisor divisor(int lambda, long q) { return prime_divisors_of(q, lambda).front(); }

template <SearchResult (*Search)(const IdealPrimeDivisor&, const SearchBudget&)>
void BM_SearchExhaustive(benchmark::State& state) {
  const auto p = divisor(23, 47);
  for (auto _ : state) benchmark::DoNotOptimize(Search(p, {3, 1, 5'000'000}));
}

template <SearchResult (*Search)(const IdealPrimeDivisor&, const SearchBudget&)>
void BM_SearchDeepHit(benchmark::State& state) {
  const auto p = divisor(7, 11);
  for (auto _ : state) benchmark::DoNotOptimize(Search(p, {4, 5, 5'000'000}));
}

template <std::vector<SweepRow> (*Sweep)(int, long, const SearchBudget&)>
void BM_Sweep(benchmark::State& state) {
  const int lambda = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(lambda, 50, {3, 3, 5'000'000}));
}

}  // namespace

BENCHMARK(BM_SearchExhaustive<kummer::search_generator_serial>)->Name("search/exhaustive/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchExhaustive<kummer::search_generator>)->Name("search/exhaustive/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchDeepHit<kummer::search_generator_serial>)->Name("search/deep-hit/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchDeepHit<kummer::search_generator>)->Name("search/deep-hit/openmp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<kummer::sweep_table_serial>)->Name("sweep/serial")->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<kummer::sweep_table>)->Name("sweep/openmp")->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
