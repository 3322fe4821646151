// Serial vs OpenMP kernels. Arg 0 = serial reference, 1 = OpenMP.

#include "nvtoric/kernels.hpp"
#include "nvtoric/potential.hpp"

#include <benchmark/benchmark.h>

using namespace nvt;

namespace {

const Rational kTr(8);

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::OpenMP : Exec::Serial; }

void BM_VerifyComplexes(benchmark::State& st) {
  RandomComplexOptions opt;
  for (auto _ : st) benchmark::DoNotOptimize(verify_random_complexes(1, 200, opt, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * 200);
}
BENCHMARK(BM_VerifyComplexes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GridScan(benchmark::State& st) {
  auto P = builtin::cubic_degeneration();
  auto F = examples::cubic_bulk_potential(examples::cubic_w0(kTr), kTr);
  // u in [-1, 1]^2 on a 1/48 lattice
  std::vector<RVec> grid;
  for (int a = -48; a <= 48; ++a)
    for (int b = -48; b <= 48; ++b) grid.push_back({Rational(a, 48), Rational(b, 48)});
  for (auto _ : st) benchmark::DoNotOptimize(scan_valuation_grid(F, P, grid, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_GridScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LiftCharts(benchmark::State& st) {
  // T(0) and T(rho) charts of S2xS2 with bulk b(1/4), four copies each
  auto F = examples::s2xs2_bulk_potential(Rational(1, 4), kTr);
  std::vector<RVec> charts;
  for (int k = 0; k < 4; ++k) {
    charts.push_back({Rational(1, 2), Rational(1, 2)});
    charts.push_back({Rational(1, 4), Rational(3, 4)});
  }
  CriticalOptions o;
  o.parallel = false;
  for (auto _ : st) benchmark::DoNotOptimize(lift_charts(F, charts, o, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(charts.size()));
}
BENCHMARK(BM_LiftCharts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
