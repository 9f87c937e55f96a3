#include <random>

#include <benchmark/benchmark.h>

#include "quintic/bring.hpp"
#include "quintic/closedform.hpp"
#include "quintic/oracle.hpp"
#include "quintic/sampling.hpp"
#include "quintic/tschirnhaus.hpp"

using namespace quintic;

namespace {

MonicQuintic sample_quintic(const PrecisionCtx& ctx) {
  std::mt19937_64 rng(7);
  return random_quintic(rng, ctx);
}

void BM_Det5(benchmark::State& state) {
  const auto ctx = PrecisionCtx::with_digits(static_cast<int>(state.range(0)));
  MonicQuintic f = sample_quintic(ctx);
  const Complex a(1, 2, ctx.bits()), b(3, -1, ctx.bits()), c(0, 1, ctx.bits()), d(2, 0, ctx.bits());
  for (auto _ : state) benchmark::DoNotOptimize(transformed_poly(f, a, b, c, d, ctx));
}
BENCHMARK(BM_Det5)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Reduce(benchmark::State& state) {
  const auto ctx = PrecisionCtx::with_digits(static_cast<int>(state.range(0)));
  MonicQuintic f = sample_quintic(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_bring(f, ctx));
}
BENCHMARK(BM_Reduce)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Series(benchmark::State& state) {
  const auto ctx = PrecisionCtx::with_digits(static_cast<int>(state.range(0)));
  const Complex s = Complex::from_double(0.3, 0.2, ctx.bits());
  for (auto _ : state) benchmark::DoNotOptimize(solve_bring(s, ctx, StrategyChoice::Series));
}
BENCHMARK(BM_Series)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Continuation(benchmark::State& state) {
  const auto ctx = PrecisionCtx::with_digits(static_cast<int>(state.range(0)));
  const Complex s = Complex::from_double(-0.8, -0.6, ctx.bits());
  for (auto _ : state) benchmark::DoNotOptimize(solve_bring(s, ctx, StrategyChoice::Ode));
}
BENCHMARK(BM_Continuation)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SolveQuintic(benchmark::State& state) {
  const auto ctx = PrecisionCtx::with_digits(static_cast<int>(state.range(0)));
  MonicQuintic f = sample_quintic(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(solve_quintic(f, ctx));
}
BENCHMARK(BM_SolveQuintic)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Aberth(benchmark::State& state) {
  const auto ctx = PrecisionCtx::with_digits(static_cast<int>(state.range(0)));
  Poly p = sample_quintic(ctx).as_poly();
  for (auto _ : state) benchmark::DoNotOptimize(aberth_solve(p, ctx));
}
BENCHMARK(BM_Aberth)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
