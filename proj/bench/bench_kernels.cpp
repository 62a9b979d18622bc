// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "mfring/kernels.hpp"

using namespace mfring;

namespace {

std::vector<CycloNum> random_coeffs(std::mt19937& rng, const FieldCtx& ctx, std::size_t n) {
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<CycloNum> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c(ctx.degree());
    for (auto& x : c) x = frac(d(rng), 1 + (d(rng) & 3));
    out.push_back(CycloNum::from_poly(ctx, std::move(c)));
  }
  return out;
}

template <bool Parallel>
void BM_cauchy(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto& ctx = cyclo_context(12);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(rng, ctx, n);
  const auto b = random_coeffs(rng, ctx, n);
  for (auto _ : state) {
    auto out = Parallel ? kernels::cauchy_product(a, b, n) : kernels::cauchy_product_serial(a, b, n);
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(state.range(0));
}

// Dense random rows; coefficient growth dominates beyond a few dozen rows.
template <bool Parallel>
void BM_echelon(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto& ctx = cyclo_context(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<kernels::Row> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_coeffs(rng, ctx, n + 8));
  for (auto _ : state) {
    auto e = Parallel ? kernels::echelon(rows) : kernels::echelon_serial(rows);
    benchmark::DoNotOptimize(e);
  }
}

}  // namespace

BENCHMARK(BM_cauchy<false>)->Name("cauchy_serial")->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cauchy<true>)->Name("cauchy_parallel")->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_echelon<false>)->Name("echelon_serial")->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_echelon<true>)->Name("echelon_parallel")->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
