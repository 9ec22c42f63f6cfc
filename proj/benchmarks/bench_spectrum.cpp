#include <benchmark/benchmark.h>

#include <cmath>

#include "fup/bounds.hpp"
#include "fup/cantor.hpp"
#include "fup/eigen.hpp"
#include "fup/fock.hpp"

namespace {

void BM_Eigenvalue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fup::CantorSpec spec(n, std::pow(3.0, 0.5 * n), fup::Domain::Disc);
  for (auto _ : state) benchmark::DoNotOptimize(fup::eigenvalue(10, spec, 1.0));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Eigenvalue)->DenseRange(4, 12, 4);

void BM_OperatorNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fup::CantorSpec spec(n, 10.0 * std::pow(3.0, n), fup::Domain::Disc);
  for (auto _ : state) benchmark::DoNotOptimize(fup::operator_norm(spec, 1.0));
}
BENCHMARK(BM_OperatorNorm)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_FockNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fup::fock_norm(n, fup::fock_critical_radius(n)));
}
BENCHMARK(BM_FockNorm)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_HyperbolicMeasure(benchmark::State& state) {
  const fup::CantorSpec spec(static_cast<int>(state.range(0)), 1.0, fup::Domain::Disc);
  for (auto _ : state) benchmark::DoNotOptimize(fup::hyperbolic_measure_from_annuli(spec));
}
BENCHMARK(BM_HyperbolicMeasure)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
