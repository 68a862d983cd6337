#include <benchmark/benchmark.h>

#include "qtutte/conversion.hpp"

namespace {

void BM_SymbolicTutteUniform(benchmark::State& state) {
  const int rho = static_cast<int>(state.range(0));
  const int nu = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = qtutte::rgf_uniform_symbolic(rho, nu);
    benchmark::DoNotOptimize(qtutte::tutte_by_subtraction(g));
  }
}
BENCHMARK(BM_SymbolicTutteUniform)->Args({2, 3})->Args({4, 4})->Args({6, 6});

void BM_SymbolicTutteByBeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = qtutte::rgf_uniform_symbolic(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(qtutte::tutte_by_beta(g));
}
BENCHMARK(BM_SymbolicTutteByBeta)->Arg(2)->Arg(4)->Arg(6);

void BM_NumericTutte(benchmark::State& state) {
  auto lat = qtutte::shared_lattice(2, 5);
  auto m = qtutte::uniform(lat, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qtutte::tutte_by_subtraction(qtutte::rgf(m)));
  }
}
BENCHMARK(BM_NumericTutte);

void BM_InverseCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qtutte::inverse_check(n, n).checked);
}
BENCHMARK(BM_InverseCheck)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_NMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qtutte::n_matrix(5, 5).total_ok);
}
BENCHMARK(BM_NMatrix)->Unit(benchmark::kMillisecond);

}  // namespace
