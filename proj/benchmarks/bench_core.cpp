#include <benchmark/benchmark.h>

#include "taylorhess/detcalc/exact.hpp"
#include "taylorhess/hessian/certificate.hpp"
#include "taylorhess/variety/variety.hpp"

namespace taylorhess {
namespace {

const TaylorParams k547{2, 5, 4, 7};

void BM_DetModP15(benchmark::State& state) {
  const PrimeField f;
  const auto p = pade_matrix(k547);
  const auto a = p.evaluate(random_point(p.ambient(), f, 1), f);
  for (auto _ : state) benchmark::DoNotOptimize(det_modp(a));
}
BENCHMARK(BM_DetModP15);

void BM_HessianAt547(benchmark::State& state) {
  const PrimeField f;
  const auto p = pade_matrix(k547);
  const auto point = random_point(p.ambient(), f, 2);
  const auto set = state.range(0) == 0 ? VariableSet::kFull : VariableSet::kEssential;
  for (auto _ : state) benchmark::DoNotOptimize(hessian_det_at(p, point, f, set));
}
BENCHMARK(BM_HessianAt547)->Arg(0)->Arg(1);

void BM_CertifyTrial(benchmark::State& state) {
  CertifyOptions options;
  options.trials = 1;
  const TaylorParams params{2, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                            static_cast<int>(state.range(0)) + 2};
  for (auto _ : state) benchmark::DoNotOptimize(certify_hessian_pade(params, options));
}
BENCHMARK(BM_CertifyTrial)->Args({5, 4})->Args({8, 5})->Unit(benchmark::kMillisecond);

void BM_ActualDimension(benchmark::State& state) {
  const TaylorParams params{2, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                            static_cast<int>(state.range(0)) + 2};
  for (auto _ : state) benchmark::DoNotOptimize(actual_dimension(params, 1, PrimeField(), 3));
}
BENCHMARK(BM_ActualDimension)->Args({5, 4})->Args({8, 5})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace taylorhess

BENCHMARK_MAIN();
