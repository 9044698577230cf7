#include <benchmark/benchmark.h>

#include "tdl/constructions.hpp"
#include "tdl/verify.hpp"

namespace {

void BM_OctagonResiduals(benchmark::State& state) {
  const auto cfg = tdl::two_octagons(1, 2, 1);
  const unsigned t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = tdl::design_residuals(cfg, t);
    benchmark::DoNotOptimize(report.max_residual);
  }
}
BENCHMARK(BM_OctagonResiduals)->Arg(5)->Arg(9)->Arg(10);

void BM_E8ResidualsExact(benchmark::State& state) {
  const auto cfg = tdl::e8_roots();
  const unsigned t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto report = tdl::design_residuals(cfg, t);
    benchmark::DoNotOptimize(report.pass);
  }
}
BENCHMARK(BM_E8ResidualsExact)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_DualIdentityExact(benchmark::State& state) {
  std::vector<tdl::ShellStat<mpq_class>> shells;
  for (long s = 0; s < state.range(0); ++s) {
    mpq_class r2(2 * s + 1, 3);
    r2.canonicalize();
    shells.push_back({r2, mpq_class(1), static_cast<unsigned long>(s + 4)});
  }
  for (auto _ : state) {
    auto resid = tdl::dual_identity_residual(shells, 2);
    benchmark::DoNotOptimize(resid);
  }
}
BENCHMARK(BM_DualIdentityExact)->Arg(2)->Arg(4)->Arg(8);

void BM_CrossShellCheck(benchmark::State& state) {
  const auto cfg = tdl::two_octagons(1, 2, 1);
  for (auto _ : state) {
    auto report = tdl::cross_shell_zero_check(cfg);
    benchmark::DoNotOptimize(report.max_q4_abs);
  }
}
BENCHMARK(BM_CrossShellCheck);

}  // namespace

BENCHMARK_MAIN();
