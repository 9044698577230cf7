#include <benchmark/benchmark.h>

#include "tdl/nonexistence.hpp"
#include "tdl/polyspace.hpp"

namespace ne = tdl::nonexistence;

namespace {

void BM_PellScan(benchmark::State& state) {
  const long hi = state.range(0);
  for (auto _ : state) {
    auto out = ne::enumerate_admissible(3, hi);
    benchmark::DoNotOptimize(out.size());
  }
  state.SetItemsProcessed(state.iterations() * (hi - 2));
}
BENCHMARK(BM_PellScan)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_CertifyRange(benchmark::State& state) {
  const long hi = state.range(0);
  const unsigned workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto cert = ne::certify_range(3, hi, workers);
    benchmark::DoNotOptimize(cert.excluded);
  }
  state.SetItemsProcessed(state.iterations() * (hi - 2));
}
BENCHMARK(BM_CertifyRange)
    ->Args({30000, 1})
    ->Args({300000, 1})
    ->Args({300000, 8})
    ->Unit(benchmark::kMillisecond);

void BM_Case1AdmissibleDimension(benchmark::State& state) {
  // The heavyweight path: exact m-window, quadratic solve, partner test.
  const mpz_class n(state.range(0));
  for (auto _ : state) {
    auto report = ne::case1_certify(n);
    benchmark::DoNotOptimize(report.excluded);
  }
}
BENCHMARK(BM_Case1AdmissibleDimension)->Arg(23)->Arg(2399)->Arg(235223);

void BM_Gegenbauer(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto q = tdl::gegenbauer(n, 9);
    benchmark::DoNotOptimize(q.degree());
  }
}
BENCHMARK(BM_Gegenbauer)->Arg(3)->Arg(24)->Arg(1000);

void BM_GammaZeroCheck(benchmark::State& state) {
  const mpz_class n(state.range(0));
  const auto q4 = tdl::gegenbauer(static_cast<unsigned>(state.range(0)), 4);
  for (auto _ : state) {
    auto [g1, g3] = ne::gamma_squared(n);
    auto value = tdl::QuadraticSurd(q4.coeff(4)) * g1 * g1 +
                 tdl::QuadraticSurd(q4.coeff(2)) * g1 + tdl::QuadraticSurd(q4.coeff(0));
    benchmark::DoNotOptimize(value.sign());
  }
}
BENCHMARK(BM_GammaZeroCheck)->Arg(5)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
