#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace csdelay {

/// Uniform frequency samples center + (j - n/2) * span / n, j = 0 .. n-1.
/// `center` is an absolute optical frequency; spectra are stored as offsets
/// from it (rotating frame).
struct FrequencyGrid {
  double center = 0.0;  // Hz
  double span = 0.0;    // Hz
  std::size_t n_points = 0;

  void validate() const;
  double spacing() const { return span / static_cast<double>(n_points); }
  double offset(std::size_t j) const {
    return (static_cast<double>(j) - 0.5 * static_cast<double>(n_points)) * spacing();
  }
  double frequency(std::size_t j) const { return center + offset(j); }
  std::vector<double> offsets() const;
  /// Index of the sample nearest to `offset_hz`, clamped to the grid.
  std::size_t nearest(double offset_hz) const;
};

/// Uniform time samples start + m * step, m = 0 .. n-1.
struct TimeGrid {
  double start = 0.0;  // s
  double step = 0.0;   // s
  std::size_t n_points = 0;

  void validate() const;
  double time(std::size_t m) const { return start + static_cast<double>(m) * step; }
  double duration() const { return static_cast<double>(n_points) * step; }
  std::vector<double> times() const;
};

/// Default propagation grid: 2^16 samples of 8 ps (524 ns window,
/// +-62.5 GHz Nyquist band, 1.9 MHz resolution). One sixteenth of the
/// window precedes t = 0 so that causality can be checked.
TimeGrid default_time_grid();

/// Frequency grid Fourier-dual to `time` (spacing 1/(n dt), span 1/dt).
FrequencyGrid dual_grid(const TimeGrid& time, double center);

/// True when the grids have equal sample counts and dual spacings (relative
/// tolerance 1e-9).
bool fourier_compatible(const TimeGrid& time, const FrequencyGrid& freq);

/// Complex amplitude sampled on a FrequencyGrid.
struct ComplexSpectrum {
  FrequencyGrid grid;
  std::vector<std::complex<double>> values;

  void validate() const;
};

bool same_grid(const FrequencyGrid& a, const FrequencyGrid& b);
bool same_grid(const TimeGrid& a, const TimeGrid& b);

bool is_power_of_two(std::size_t n);

}  // namespace csdelay
