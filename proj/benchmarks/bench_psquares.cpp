#include <benchmark/benchmark.h>

#include "psq/extremal.hpp"
#include "psq/lemma_lab.hpp"
#include "psq/oracle.hpp"
#include "psq/pequiv.hpp"
#include "psq/prev_encoding.hpp"
#include "psq/psquares.hpp"

namespace {

psq::PString periodic(std::size_t n, int sigma) {
  std::vector<psq::Symbol> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<psq::Symbol>((i * i + i / 3) % static_cast<std::size_t>(sigma));
  return psq::PString(std::move(v), sigma);
}

void BM_PrevEncode(benchmark::State& state) {
  const auto s = periodic(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(psq::prev_encode(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PrevEncode)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_PEquivalent(benchmark::State& state) {
  const auto x = periodic(static_cast<std::size_t>(state.range(0)), 4);
  const auto y = x;
  for (auto _ : state) benchmark::DoNotOptimize(psq::p_equivalent(x, y));
}
BENCHMARK(BM_PEquivalent)->Range(16, 4096);

void BM_ProfileFast(benchmark::State& state) {
  const auto s = periodic(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(psq::profile_psquares(s.symbols()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProfileFast)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_ProfileOracle(benchmark::State& state) {
  const auto s = periodic(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(psq::oracle::profile_psquares(s));
}
BENCHMARK(BM_ProfileOracle)->RangeMultiplier(2)->Range(8, 32);

void BM_Scan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(psq::exhaustive_bound_scan(static_cast<std::size_t>(state.range(0)), 3, 1));
  }
}
BENCHMARK(BM_Scan)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_Maximizer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psq::heuristic_maximizer(20, 2, 10000, 42));
}
BENCHMARK(BM_Maximizer)->Unit(benchmark::kMillisecond);

void BM_LemmaSuiteSmall(benchmark::State& state) {
  psq::SuiteLimits limits;
  limits.max_n = 8;
  limits.random_instances = 5000;
  limits.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(psq::run_lemma_suite(limits, 42));
}
BENCHMARK(BM_LemmaSuiteSmall)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
