#include <benchmark/benchmark.h>

#include <complex>

#include "csdelay/faddeeva.hpp"
#include "csdelay/filter.hpp"
#include "csdelay/fit/models.hpp"
#include "csdelay/propagation.hpp"
#include "csdelay/susceptibility.hpp"

using namespace csdelay;

namespace {

const AtomModel& cs() {
  static const AtomModel m = cesium_d1();
  return m;
}

TimeGrid grid_log2(int log2) {
  TimeGrid t = default_time_grid();
  t.n_points = std::size_t{1} << log2;
  t.start = -static_cast<double>(t.n_points / 16) * t.step;
  return t;
}

VaporCell hot_cell() {
  VaporCell c;
  c.temperature = 356.65;
  return c;
}

ComplexSpectrum cell_transfer(const TimeGrid& t) {
  const VaporCell cell = hot_cell();
  return transfer_function(compute_response(cs(), cell, dual_grid(t, cs().nu_line)), cell);
}

}  // namespace

static void BM_Faddeeva(benchmark::State& state) {
  std::complex<double> z(-3.0, 0.01);
  const std::complex<double> dz(6.0 / 1024, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(faddeeva(z));
    z += dz;
    if (z.real() > 3.0) z -= 6.0;
  }
}
BENCHMARK(BM_Faddeeva);

static void BM_Susceptibility(benchmark::State& state) {
  const FrequencyGrid g = dual_grid(grid_log2(static_cast<int>(state.range(0))), cs().nu_line);
  const VaporCell cell = hot_cell();
  for (auto _ : state) benchmark::DoNotOptimize(compute_response(cs(), cell, g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.n_points));
}
BENCHMARK(BM_Susceptibility)->Arg(15)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Propagate(benchmark::State& state) {
  const TimeGrid t = grid_log2(static_cast<int>(state.range(0)));
  const ComplexSpectrum transfer = cell_transfer(t);
  PhotonSource src;
  src.nu0 = cs().nu_line;
  const WavePacket photon = make_photon(src, t, cs().nu_line);
  for (auto _ : state) benchmark::DoNotOptimize(propagate(photon, transfer));
}
BENCHMARK(BM_Propagate)->Arg(15)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Ensemble(benchmark::State& state) {
  const TimeGrid t = grid_log2(16);
  const ComplexSpectrum transfer = cell_transfer(t);
  PhotonSource src;
  src.nu0 = cs().nu_line;
  src.inhom_fwhm = 3.57e9;
  DiffusionOptions opt;
  opt.nodes = static_cast<std::size_t>(state.range(0));
  opt.filter = FilterSpec{cs().nu_line, 192e6, 37.8e9};
  for (auto _ : state) benchmark::DoNotOptimize(average_spectral_diffusion(src, transfer, t, opt));
}
BENCHMARK(BM_Ensemble)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond)->Iterations(2);

static void BM_TransmissionScanFit(benchmark::State& state) {
  VaporCell cell = hot_cell();
  const fit::TransmissionScanModel model(cs(), cell, -6e9, 15e9, 100e6, 21e9);
  fit::Histogram1D data;
  for (int i = 0; i <= 210; ++i) {
    const double x = -6e9 + 1e8 * i;
    data.centers.push_back(x);
    data.values.push_back(model.evaluate(x, 3.57e9, 153e6, 800.0, 0.0, 20.0, 0.0, 4.5e9));
  }
  for (auto _ : state) benchmark::DoNotOptimize(fit::fit_transmission_scan(data, cs(), cell, 153e6));
}
BENCHMARK(BM_TransmissionScanFit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
