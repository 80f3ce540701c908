#pragma once

#include <complex>
#include <vector>

#include "csdelay/grid.hpp"

namespace csdelay {

/// Complex field envelope on a time grid, in a frame rotating at
/// `frame_frequency`: the physical field is field(t) exp(-2 pi i nu_frame t).
struct WavePacket {
  TimeGrid grid;
  double frame_frequency = 0.0;  // Hz
  std::vector<std::complex<double>> field;

  void validate() const;
  /// Integral of |E|^2 dt (rectangle rule).
  double energy() const;
};

/// Photon detection-probability density on a time grid.
struct IntensityTrace {
  TimeGrid grid;
  std::vector<double> intensity;

  void validate() const;
  /// Integral of I dt.
  double area() const;
  /// Integral of t I dt / area(). Throws ZeroNormError for a vanishing trace.
  double mean_time() const;
  /// Time of the largest sample.
  double peak_time() const;
};

IntensityTrace intensity_of(const WavePacket& packet);

}  // namespace csdelay
