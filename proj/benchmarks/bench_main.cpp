#include <benchmark/benchmark.h>

#include "subflag/classical_surface.hpp"
#include "subflag/codazzi.hpp"
#include "subflag/holonomy_flag.hpp"
#include "subflag/report.hpp"

using namespace subflag;

namespace {

void BM_Su2Curvature(benchmark::State& state) {
  const auto frame = su2_frame();
  Sampler s(kDefaultSeed);
  const auto p = s.point(ChartId::su2);
  const auto mode = static_cast<DerivativeMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(codazzi_curvature(frame, p, mode));
  state.SetLabel(std::string(mode_name(mode)));
}
BENCHMARK(BM_Su2Curvature)->Arg(0)->Arg(1);

void BM_Su2Derivation(benchmark::State& state) {
  const auto frame = su2_frame();
  const ChartPoint p{ChartId::su2, {0.3, 0.4, 0.5}};
  for (auto _ : state) benchmark::DoNotOptimize(derivation_equations(frame, p, DerivativeMode::standard));
}
BENCHMARK(BM_Su2Derivation);

void BM_ClosedFormCurvatureExact(benchmark::State& state) {
  using E = AlgebraElement<Rational>;
  const auto ct = make_connection(Rational(1, 3), Rational(5, 2), Rational(-7, 4), Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(curvature(ct, E::X(), E::Y(), E::Z()));
}
BENCHMARK(BM_ClosedFormCurvatureExact);

void BM_FlagDimensions(benchmark::State& state) {
  const auto mode = static_cast<FlagMode>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(flag_dimensions(Rational(1), Rational(3), Rational(1), Rational(2), mode));
  state.SetLabel(std::string(flag_mode_name(mode)));
}
BENCHMARK(BM_FlagDimensions)->Arg(0)->Arg(1);

void BM_Sweep(benchmark::State& state) {
  const auto grid = parse_grid("-1,0,1");
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(grid, FlagMode::projection));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

void BM_TorusCodazziResidual(benchmark::State& state) {
  const auto t = torus(2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(codazzi_residual(t, {0.7, 1.9}));
}
BENCHMARK(BM_TorusCodazziResidual);

void BM_Su2ReportJson(benchmark::State& state) {
  ReportRequest req;
  req.group = GroupKind::su2;
  req.point_count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_report(req).dump());
}
BENCHMARK(BM_Su2ReportJson)->Arg(5)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
