#include <benchmark/benchmark.h>

#include "support/synthetic.hpp"
#include "wwmtc/wwmtc.hpp"

namespace {

using namespace wwmtc;

void BM_EllipF(benchmark::State& state) {
  double phi = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic::ellip_f(phi, 0.9));
    phi = phi < 1.5 ? phi + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_EllipF);

void BM_EllipE(benchmark::State& state) {
  double phi = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic::ellip_e(phi, 0.9));
    phi = phi < 1.5 ? phi + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_EllipE);

void BM_SolveBeam(benchmark::State& state) {
  double p = 0.75;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_beam({27.0}, ShapeParam(p)));
    p = p < 0.99 ? p + 1e-4 : 0.75;
  }
}
BENCHMARK(BM_SolveBeam);

void BM_StateForLength(benchmark::State& state) {
  const MuscleSpec spec = MuscleSpec::radial_reference();
  double len = 30.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(state_for_length(spec, len));
    len = len < 200.0 ? len + 0.37 : 30.0;
  }
}
BENCHMARK(BM_StateForLength);

void BM_Curve(benchmark::State& state) {
  const MuscleSpec spec = MuscleSpec::planar_reference();
  for (auto _ : state) benchmark::DoNotOptimize(curve(spec, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Curve)->Arg(100)->Arg(1000);

void BM_DesignSearch(benchmark::State& state) {
  DesignConstraints c;
  c.natural_length_mm = {150.0, 260.0};
  c.min_stroke_mm = 50.0;
  c.max_width_at_full_mm = 22.0;
  c.h0_mm = 22.0;
  c.n_range = {1, static_cast<int>(state.range(0))};
  c.beam_length_mm = {10.0, 45.0};
  for (auto _ : state) benchmark::DoNotOptimize(search(c));
}
BENCHMARK(BM_DesignSearch)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FitTendon(benchmark::State& state) {
  const auto log = synthetic::tendon_log({50.0, 8.0, 0.02}, 3, 0.02, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fit_tendon(log));
}
BENCHMARK(BM_FitTendon)->Unit(benchmark::kMicrosecond);

void BM_FitWinch(benchmark::State& state) {
  const auto log = synthetic::winch_log({WinchModelKind::play, 20.0, 5.0}, 0.03, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fit_winch(log));
}
BENCHMARK(BM_FitWinch)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
