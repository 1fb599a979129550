#include <benchmark/benchmark.h>

#include "qcdist/analysis.hpp"
#include "qcdist/distortion_geometry.hpp"
#include "qcdist/mori_bounds.hpp"
#include "qcdist/schwarz.hpp"
#include "qcdist/special_fn.hpp"

namespace {

void BM_EllipK(benchmark::State& state) {
  double r = 0.3;
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::ellip_k(r));
}
BENCHMARK(BM_EllipK);

void BM_Mu(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::mu(0.37));
}
BENCHMARK(BM_Mu);

void BM_MuInvTheta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::mu_inv(1.2));
}
BENCHMARK(BM_MuInvTheta);

void BM_MuInvBracketed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::mu_inv_bracketed(1.2));
}
BENCHMARK(BM_MuInvBracketed);

void BM_PhiK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::phi_k(1.7, 0.42));
}
BENCHMARK(BM_PhiK);

void BM_UQuotient(benchmark::State& state) {
  const qcdist::DiskPoint x(0.3, -0.2), y(-0.1, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::u_quotient(2.5, x, y, 1.5));
}
BENCHMARK(BM_UQuotient);

void BM_MinimizeOverT(benchmark::State& state) {
  const qcdist::DiskPoint x(0.3, -0.2), y(-0.1, 0.5);
  const qcdist::EstimatorConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::minimize_u_over_t(x, y, 1.5, cfg));
}
BENCHMARK(BM_MinimizeOverT);

void BM_HqEstimate(benchmark::State& state) {
  qcdist::EstimatorConfig cfg;
  cfg.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::hq_estimate(1.5, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HqEstimate)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BvInf(benchmark::State& state) {
  const auto planar = qcdist::GrotzschPolicy::exact_planar();
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::bv_inf_bound(2, 1.4, planar));
}
BENCHMARK(BM_BvInf);

void BM_CofK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::c_of_k(2.0));
}
BENCHMARK(BM_CofK);

void BM_GoldenTable(benchmark::State& state) {
  qcdist::TableSpec spec;
  spec.columns = qcdist::parse_columns("conj,av,fv,bv");
  for (auto _ : state) benchmark::DoNotOptimize(qcdist::make_table(spec));
}
BENCHMARK(BM_GoldenTable)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
