#include "csdelay/fourier.hpp"

#include <cmath>

#include "csdelay/constants.hpp"
#include "csdelay/error.hpp"
#include "fft.hpp"

namespace csdelay {

namespace {

// (-1)^m for the half-grid shift of the frequency origin.
double alternating(std::size_t m) { return (m & 1U) ? -1.0 : 1.0; }

std::complex<double> phase(double x) { return std::polar(1.0, 2.0 * constants::pi * x); }

}  // namespace

void WavePacket::validate() const {
  grid.validate();
  if (field.size() != grid.n_points) throw GridMismatch("wave packet length does not match its grid");
}

double WavePacket::energy() const {
  double s = 0.0;
  for (const auto& e : field) s += std::norm(e);
  return s * grid.step;
}

void IntensityTrace::validate() const {
  grid.validate();
  if (intensity.size() != grid.n_points) throw GridMismatch("intensity trace length does not match its grid");
}

double IntensityTrace::area() const {
  double s = 0.0;
  for (double v : intensity) s += v;
  return s * grid.step;
}

double IntensityTrace::mean_time() const {
  double s = 0.0;
  double st = 0.0;
  for (std::size_t m = 0; m < intensity.size(); ++m) {
    s += intensity[m];
    st += grid.time(m) * intensity[m];
  }
  if (!(s > 0.0)) throw ZeroNormError("intensity trace has zero norm");
  return st / s;
}

double IntensityTrace::peak_time() const {
  std::size_t best = 0;
  for (std::size_t m = 1; m < intensity.size(); ++m) {
    if (intensity[m] > intensity[best]) best = m;
  }
  return grid.time(best);
}

IntensityTrace intensity_of(const WavePacket& packet) {
  IntensityTrace out{packet.grid, std::vector<double>(packet.field.size())};
  for (std::size_t m = 0; m < packet.field.size(); ++m) out.intensity[m] = std::norm(packet.field[m]);
  return out;
}

ComplexSpectrum to_spectrum(const WavePacket& packet) {
  packet.validate();
  const TimeGrid& tg = packet.grid;
  ComplexSpectrum out{dual_grid(tg, packet.frame_frequency), {}};
  out.values.resize(tg.n_points);
  for (std::size_t m = 0; m < tg.n_points; ++m) out.values[m] = packet.field[m] * alternating(m);
  detail::fft_inplace(out.values, detail::FftSign::backward);
  for (std::size_t j = 0; j < tg.n_points; ++j) {
    out.values[j] *= tg.step * phase(out.grid.offset(j) * tg.start);
  }
  return out;
}

WavePacket to_time(const ComplexSpectrum& spectrum, const TimeGrid& time) {
  spectrum.validate();
  time.validate();
  if (!fourier_compatible(time, spectrum.grid)) {
    throw GridMismatch("time grid is not the Fourier dual of the spectrum grid");
  }
  WavePacket out{time, spectrum.grid.center, {}};
  out.field.resize(time.n_points);
  for (std::size_t j = 0; j < time.n_points; ++j) {
    out.field[j] = spectrum.values[j] * phase(-spectrum.grid.offset(j) * time.start);
  }
  detail::fft_inplace(out.field, detail::FftSign::forward);
  const double df = spectrum.grid.spacing();
  for (std::size_t m = 0; m < time.n_points; ++m) out.field[m] *= df * alternating(m);
  return out;
}

}  // namespace csdelay
