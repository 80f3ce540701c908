#include "csdelay/propagation.hpp"

#include <algorithm>
#include <cmath>

#include "csdelay/constants.hpp"
#include "csdelay/error.hpp"
#include "csdelay/fourier.hpp"
#include "csdelay/parallel.hpp"
#include "fft.hpp"

namespace csdelay {

namespace {

// Nodes are summed in fixed blocks and the blocks in index order, so the
// floating-point result does not depend on the worker count.
constexpr std::size_t kBlock = 8;

struct Quadrature {
  std::vector<double> offsets;
  std::vector<double> weights;
};

Quadrature diffusion_nodes(const PhotonSource& source, const DiffusionOptions& opt, std::size_t nodes) {
  Quadrature q;
  if (source.inhom_fwhm == 0.0) {
    q.offsets = {0.0};
    q.weights = {1.0};
  } else {
    const double sigma = source.inhom_fwhm / constants::gaussian_fwhm_per_sigma;
    const double half = opt.span_sigmas * sigma;
    q.offsets.resize(nodes);
    q.weights.resize(nodes);
    double total = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      const double d = -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(nodes - 1);
      const double end = (i == 0 || i + 1 == nodes) ? 0.5 : 1.0;
      q.offsets[i] = d;
      q.weights[i] = end * std::exp(-0.5 * (d / sigma) * (d / sigma));
      total += q.weights[i];
    }
    for (auto& w : q.weights) w /= total;
  }
  if (opt.filter && opt.placement == FilterPlacement::carrier_weight) {
    for (std::size_t i = 0; i < q.offsets.size(); ++i) {
      q.weights[i] *= filter_weight(*opt.filter, source.nu0 + q.offsets[i]);
    }
  }
  return q;
}

EnsembleOutput run_ensemble(const PhotonSource& source, const ComplexSpectrum& cell_transfer, const TimeGrid& time,
                            const DiffusionOptions& opt, std::size_t nodes) {
  const ComplexSpectrum transfer = opt.causal ? causal_projection(cell_transfer) : cell_transfer;
  const Quadrature q = diffusion_nodes(source, opt, nodes);
  const double frame = transfer.grid.center;
  std::vector<std::complex<double>> field_filter;
  if (opt.filter && opt.placement == FilterPlacement::field) {
    const ComplexSpectrum h = filter_transfer(*opt.filter, transfer.grid);
    field_filter = opt.causal ? causal_projection(h).values : h.values;
  }
  const std::size_t n = time.n_points;
  const std::size_t blocks = (q.offsets.size() + kBlock - 1) / kBlock;
  std::vector<std::vector<double>> sample_parts(blocks);
  std::vector<std::vector<double>> ref_parts(blocks);

  parallel_for(blocks, opt.workers, [&](std::size_t b) {
    std::vector<double> s(n, 0.0);
    std::vector<double> r(n, 0.0);
    const std::size_t end = std::min(q.offsets.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) {
      const double w = q.weights[i];
      ComplexSpectrum spec = to_spectrum(make_photon(source, time, frame, q.offsets[i]));
      if (!field_filter.empty()) {
        for (std::size_t j = 0; j < n; ++j) spec.values[j] *= field_filter[j];
      }
      const WavePacket ref = to_time(spec, time);
      for (std::size_t j = 0; j < n; ++j) spec.values[j] *= transfer.values[j];
      const WavePacket out = to_time(spec, time);
      for (std::size_t m = 0; m < n; ++m) {
        r[m] += w * std::norm(ref.field[m]);
        s[m] += w * std::norm(out.field[m]);
      }
    }
    sample_parts[b] = std::move(s);
    ref_parts[b] = std::move(r);
  });

  EnsembleOutput out;
  out.sample = {time, std::vector<double>(n, 0.0)};
  out.reference = {time, std::vector<double>(n, 0.0)};
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t m = 0; m < n; ++m) {
      out.sample.intensity[m] += sample_parts[b][m];
      out.reference.intensity[m] += ref_parts[b][m];
    }
  }
  out.nodes_used = q.offsets.size();
  return out;
}

void require_same(const TimeGrid& a, const TimeGrid& b) {
  if (!same_grid(a, b)) throw GridMismatch("intensity traces live on different time grids");
}

}  // namespace

ComplexSpectrum transfer_function(const OpticalResponse& response, const VaporCell& cell) {
  response.validate();
  cell.validate();
  if (std::abs(response.length - cell.length) > 1e-12 * cell.length) {
    throw InvalidArgument("transfer_function: response was computed for a different cell length");
  }
  const auto& grid = response.chi.grid;
  ComplexSpectrum out{grid, std::vector<std::complex<double>>(grid.n_points)};
  const std::complex<double> i(0.0, 1.0);
  for (std::size_t j = 0; j < grid.n_points; ++j) {
    const double k = 2.0 * constants::pi * grid.frequency(j) / constants::speed_of_light;
    out.values[j] = std::exp(i * response.index_excess[j] * k * cell.length);
  }
  return out;
}

ComplexSpectrum vacuum_transfer(const FrequencyGrid& grid) {
  grid.validate();
  return ComplexSpectrum{grid, std::vector<std::complex<double>>(grid.n_points, {1.0, 0.0})};
}

ComplexSpectrum causal_projection(const ComplexSpectrum& transfer) {
  transfer.validate();
  const std::size_t n = transfer.grid.n_points;
  // The impulse response at lag k dt is df (-1)^k g_k with g the forward DFT
  // of the samples; the (-1)^k cancels on the way back, so only g is needed.
  // Band limiting turns the jump of a causal response at t = 0 into ringing
  // that is odd about t = 0, so the negative-lag samples are folded onto the
  // positive lags (cancelling the ringing there) instead of being dropped.
  std::vector<std::complex<double>> g = transfer.values;
  detail::fft_inplace(g, detail::FftSign::forward);
  for (std::size_t k = 1; k < n / 2; ++k) g[k] += g[n - k];
  for (std::size_t k = n / 2; k < n; ++k) g[k] = 0.0;
  detail::fft_inplace(g, detail::FftSign::backward);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : g) v *= scale;
  return ComplexSpectrum{transfer.grid, std::move(g)};
}

WavePacket propagate(const WavePacket& packet, const ComplexSpectrum& transfer) {
  packet.validate();
  transfer.validate();
  if (!fourier_compatible(packet.grid, transfer.grid) ||
      std::abs(packet.frame_frequency - transfer.grid.center) > 1e-6 * transfer.grid.spacing()) {
    throw GridMismatch("packet and transfer function grids are not Fourier duals");
  }
  ComplexSpectrum spec = to_spectrum(packet);
  for (std::size_t j = 0; j < spec.values.size(); ++j) spec.values[j] *= transfer.values[j];
  return to_time(spec, packet.grid);
}

void DiffusionOptions::validate() const {
  if (nodes < 3 || nodes % 2 == 0) throw InvalidArgument("diffusion quadrature needs an odd node count >= 3");
  if (!(span_sigmas > 0.0)) throw InvalidArgument("diffusion span must be positive");
  if (filter) filter->validate();
}

EnsembleOutput average_spectral_diffusion(const PhotonSource& source, const ComplexSpectrum& transfer,
                                          const TimeGrid& time, const DiffusionOptions& options) {
  source.validate();
  transfer.validate();
  time.validate();
  options.validate();
  if (!fourier_compatible(time, transfer.grid)) {
    throw GridMismatch("time grid is not the Fourier dual of the transfer grid");
  }
  EnsembleOutput out = run_ensemble(source, transfer, time, options, options.nodes);
  if (options.check_convergence && source.inhom_fwhm > 0.0) {
    const EnsembleOutput fine = run_ensemble(source, transfer, time, options, 2 * options.nodes - 1);
    const double d1 = center_of_mass_delay(out.sample, out.reference);
    const double d2 = center_of_mass_delay(fine.sample, fine.reference);
    const double change = std::abs(d2 - d1) / std::max(std::abs(d1), time.step);
    out.convergence_change = change;
    out.converged = change < 1e-3;
  }
  return out;
}

std::vector<double> ensemble_power_spectrum(const PhotonSource& source, const TimeGrid& time, double frame,
                                            const DiffusionOptions& options) {
  source.validate();
  options.validate();
  const Quadrature q = diffusion_nodes(source, options, options.nodes);
  std::vector<double> power(time.n_points, 0.0);
  for (std::size_t i = 0; i < q.offsets.size(); ++i) {
    const ComplexSpectrum spec = to_spectrum(make_photon(source, time, frame, q.offsets[i]));
    for (std::size_t j = 0; j < power.size(); ++j) power[j] += q.weights[i] * std::norm(spec.values[j]);
  }
  return power;
}

IntensityTrace apply_irf(const IntensityTrace& waveform, double irf_fwhm) {
  waveform.validate();
  if (!(irf_fwhm >= 0.0)) throw InvalidArgument("IRF FWHM must be non-negative");
  const double sigma = irf_fwhm / constants::gaussian_fwhm_per_sigma;
  const std::size_t n = waveform.grid.n_points;
  const double dt = waveform.grid.step;
  if (sigma < 0.05 * dt) return waveform;

  std::vector<std::complex<double>> kernel(n);
  double total = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double lag = (m < n / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(n)) * dt;
    const double g = std::exp(-0.5 * (lag / sigma) * (lag / sigma));
    kernel[m] = g;
    total += g;
  }
  std::vector<std::complex<double>> data(waveform.intensity.begin(), waveform.intensity.end());
  detail::fft_inplace(kernel, detail::FftSign::forward);
  detail::fft_inplace(data, detail::FftSign::forward);
  for (std::size_t j = 0; j < n; ++j) data[j] *= kernel[j];
  detail::fft_inplace(data, detail::FftSign::backward);
  IntensityTrace out{waveform.grid, std::vector<double>(n)};
  const double scale = 1.0 / (total * static_cast<double>(n));
  for (std::size_t m = 0; m < n; ++m) out.intensity[m] = data[m].real() * scale;
  return out;
}

double center_of_mass_delay(const IntensityTrace& sample, const IntensityTrace& reference) {
  sample.validate();
  reference.validate();
  require_same(sample.grid, reference.grid);
  const double ref_area = reference.area();
  if (!(ref_area > 0.0)) throw ZeroNormError("reference trace has zero norm");
  if (!(sample.area() > 1e-12 * ref_area)) throw ZeroNormError("sample trace is fully absorbed");
  return sample.mean_time() - reference.mean_time();
}

double transmitted_fraction(const IntensityTrace& sample, const IntensityTrace& reference) {
  sample.validate();
  reference.validate();
  require_same(sample.grid, reference.grid);
  const double ref_area = reference.area();
  if (!(ref_area > 0.0)) throw ZeroNormError("reference trace has zero norm");
  return sample.area() / ref_area;
}

double tail_fraction(const IntensityTrace& trace, double tail) {
  trace.validate();
  const std::size_t n = trace.intensity.size();
  const auto first = static_cast<std::size_t>(std::floor((1.0 - tail) * static_cast<double>(n)));
  double all = 0.0;
  double late = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    all += trace.intensity[m];
    if (m >= first) late += trace.intensity[m];
  }
  if (!(all > 0.0)) throw ZeroNormError("trace has zero norm");
  return late / all;
}

double precursor_ratio(const IntensityTrace& trace, double front) {
  trace.validate();
  double early = 0.0;
  double peak = 0.0;
  for (std::size_t m = 0; m < trace.intensity.size(); ++m) {
    peak = std::max(peak, trace.intensity[m]);
    if (trace.grid.time(m) < front - 1e-6 * trace.grid.step) early = std::max(early, trace.intensity[m]);
  }
  if (!(peak > 0.0)) throw ZeroNormError("trace has zero norm");
  return early / peak;
}

DelayResult measure_delay(const EnsembleOutput& ensemble, double irf_fwhm) {
  DelayResult r;
  r.transmitted_fraction = transmitted_fraction(ensemble.sample, ensemble.reference);
  r.mean_delay = center_of_mass_delay(ensemble.sample, ensemble.reference);
  r.waveform = apply_irf(ensemble.sample, irf_fwhm);
  r.reference_waveform = apply_irf(ensemble.reference, irf_fwhm);
  r.peak_time = r.waveform.peak_time();
  r.peak_delay = r.peak_time - r.reference_waveform.peak_time();
  r.wraparound_suspect = tail_fraction(ensemble.sample) > 1e-6;
  return r;
}

std::vector<ScanVariant> default_scan_variants() {
  using K = ScanVariant::Kind;
  return {
      {"fourier_limited_153MHz", K::lorentzian_photon, 1.0 / (2.0 * constants::pi * 1.04e-9)},
      {"filter_width_192MHz", K::lorentzian_photon, 192e6},
      {"broadened_384MHz", K::lorentzian_photon, 384e6},
      {"filtered_ensemble", K::filtered_ensemble, 0.0},
  };
}

std::vector<ScanCurve> spectral_delay_scan(const PhotonSource& source, const ComplexSpectrum& transfer,
                                           const TimeGrid& time, const ScanOptions& options) {
  source.validate();
  options.filter.validate();
  if (options.nu_f_offsets.empty()) throw InvalidArgument("spectral scan: no filter frequencies");
  const auto [lo, hi] = std::minmax_element(options.nu_f_offsets.begin(), options.nu_f_offsets.end());
  if (*hi - *lo > options.filter.fsr) throw InvalidArgument("spectral scan wider than one free spectral range");
  const double frame = transfer.grid.center;
  const std::size_t np = options.nu_f_offsets.size();
  const std::size_t nv = options.variants.size();

  std::vector<ScanPoint> flat(np * nv);
  parallel_for(flat.size(), options.workers, [&](std::size_t k) {
    const ScanVariant& v = options.variants[k / np];
    const double offset = options.nu_f_offsets[k % np];
    DiffusionOptions diff = options.diffusion;
    diff.workers = 1;
    diff.check_convergence = false;
    PhotonSource src = source;
    if (v.kind == ScanVariant::Kind::lorentzian_photon) {
      src.t1 = lifetime_for_fwhm(v.photon_fwhm);
      src.nu0 = frame + offset;
      src.inhom_fwhm = 0.0;
      diff.filter.reset();
    } else {
      FilterSpec f = options.filter;
      f.nu_f = frame + offset;
      diff.filter = f;
    }
    ScanPoint p;
    p.nu_f_offset = offset;
    const EnsembleOutput e = average_spectral_diffusion(src, transfer, time, diff);
    p.transmitted_fraction = transmitted_fraction(e.sample, e.reference);
    try {
      p.mean_delay = center_of_mass_delay(e.sample, e.reference);
      p.precursor = precursor_ratio(e.sample);
    } catch (const ZeroNormError& err) {
      p.error = err.what();
    }
    flat[k] = std::move(p);
  });

  std::vector<ScanCurve> curves(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    curves[v].variant = options.variants[v];
    curves[v].points.assign(flat.begin() + static_cast<std::ptrdiff_t>(v * np),
                            flat.begin() + static_cast<std::ptrdiff_t>((v + 1) * np));
  }
  return curves;
}

}  // namespace csdelay
