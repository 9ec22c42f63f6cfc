#include <benchmark/benchmark.h>

#include <cstdint>

#include "fup/special.hpp"

namespace {

void BM_LnGamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fup::ln_gamma(x));
    x = x < 1e5 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_LnGamma);

void BM_BetaPrimeTails(benchmark::State& state) {
  const fup::BetaPrimeParams p(state.range(0), 1.0);
  double y = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fup::betaprime_tails(y, p));
    y = y < 1e4 ? y * 1.3 : 0.01;
  }
}
BENCHMARK(BM_BetaPrimeTails)->Arg(0)->Arg(10)->Arg(1000)->Arg(100000);

void BM_Gauss2F1(benchmark::State& state) {
  const double k = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fup::gauss_2f1_neg(k + 3.0, k + 1.0, k + 2.0, 0.8));
}
BENCHMARK(BM_Gauss2F1)->Arg(0)->Arg(10)->Arg(100);

}  // namespace
