// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "borwein/bounds.hpp"
#include "borwein/certify.hpp"
#include "borwein/qseries.hpp"
#include "borwein/saddle.hpp"
#include "borwein/signcheck.hpp"

namespace {

void BM_BorweinExpand(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto p = borwein::borwein_poly(n, 1);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_BorweinExpand)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_SquareExpand(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto p = borwein::borwein_poly(n, 2);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_SquareExpand)->Arg(32)->Arg(64)->Arg(128);

void BM_VerifyPattern(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  auto p = borwein::borwein_poly(n, 1);
  auto rule = borwein::borwein_rule(3);
  for (auto _ : state) {
    auto violations = borwein::verify_pattern(p, rule);
    benchmark::DoNotOptimize(violations);
  }
}
BENCHMARK(BM_VerifyPattern)->Arg(64)->Arg(128);

void BM_SolveRadius(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    double r = borwein::solve_radius(n, 3 * n, 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SolveRadius)->Arg(1000)->Arg(7000);

void BM_TailBound(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const double r = borwein::solve_radius(n, 3 * n, 2);
  for (auto _ : state) {
    double e = borwein::tail_error_bound(n, r, 2);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_TailBound)->Arg(1000)->Arg(7000);

void BM_MStar(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto m = borwein::mstar(n, 2);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MStar)->Arg(1000);

void BM_Beta(benchmark::State& state) {
  for (auto _ : state) {
    // vary mu slightly so the memo does not short-circuit the measurement
    const double mu = 0.70 + 1e-9 * static_cast<double>(state.iterations() % 97);
    double b = borwein::beta(1, mu, state.range(0));
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_Beta)->Arg(2000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
