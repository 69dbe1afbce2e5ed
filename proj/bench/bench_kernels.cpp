// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// core count; on one core both variants should be within noise.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "dyncore/dynamic.hpp"
#include "dyncore/oracle.hpp"
#include "dyncore/reducts.hpp"
#include "dyncore/table.hpp"

namespace {

using namespace dyncore;

std::shared_ptr<const DecisionSystem> synthetic(std::size_t rows, std::size_t attrs,
                                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<ValueCode>> cond(rows, std::vector<ValueCode>(attrs));
  std::vector<ValueCode> dec(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto& v : cond[r]) v = static_cast<ValueCode>(rng.bounded(3));
    dec[r] = static_cast<ValueCode>(rng.bounded(2));
  }
  return std::make_shared<const DecisionSystem>(DecisionSystem::from_codes(cond, dec));
}

Execution policy(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_DiscernibilityMatrix(benchmark::State& state) {
  const auto s = synthetic(static_cast<std::size_t>(state.range(1)), 16, 1);
  const auto t = SubSystem::whole(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(discernibility_matrix(t, policy(state)));
  }
}
BENCHMARK(BM_DiscernibilityMatrix)->ArgsProduct({{0, 1}, {200, 800}});

void BM_AnalyzeFamily(benchmark::State& state) {
  const auto s = synthetic(120, 10, 2);
  const auto family = sample_family(
      s, {7, {Rational::make(1, 2), Rational::make(3, 4)},
          static_cast<std::size_t>(state.range(1))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_family(s, family, {}, policy(state)));
  }
}
BENCHMARK(BM_AnalyzeFamily)->ArgsProduct({{0, 1}, {4, 16}});

void BM_BruteForceReducts(benchmark::State& state) {
  const auto s = synthetic(40, static_cast<std::size_t>(state.range(1)), 3);
  const auto t = SubSystem::whole(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_force_reducts(t, policy(state)));
  }
}
BENCHMARK(BM_BruteForceReducts)->ArgsProduct({{0, 1}, {8, 12}});

}  // namespace

BENCHMARK_MAIN();
