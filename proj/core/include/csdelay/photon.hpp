#pragma once

#include "csdelay/grid.hpp"
#include "csdelay/wave.hpp"

namespace csdelay {

/// Quantum-dot single-photon source: exponential decay with lifetime t1 at
/// carrier nu0, optionally broadened by Gaussian spectral diffusion.
struct PhotonSource {
  double t1 = 1.04e-9;       // s
  double nu0 = 0.0;          // Hz, absolute carrier frequency
  double inhom_fwhm = 0.0;   // Hz

  void validate() const;
  /// Fourier-limited FWHM 1/(2 pi t1).
  double homogeneous_fwhm() const;
};

/// Lifetime whose Fourier-limited Lorentzian has the given FWHM.
double lifetime_for_fwhm(double fwhm);

/// exp(-t/2t1) exp(-2 pi i (nu0 + carrier_shift - frame) t) Theta(t) on `grid`,
/// normalized so that the integral of |E|^2 is 1. Theta(0) = 1/2.
/// Throws ResolutionError when the step exceeds t1/50 or fewer than 20 t1
/// follow t = 0.
WavePacket make_photon(const PhotonSource& source, const TimeGrid& grid, double frame_frequency,
                       double carrier_shift = 0.0);

/// FWHM of |E(nu)|^2, half-maximum crossings located by linear interpolation.
double spectral_fwhm(const ComplexSpectrum& spectrum);

/// FWHM of a sampled non-negative profile y(x) on a uniform axis x0 + j dx.
double profile_fwhm(const std::vector<double>& y, double dx);

}  // namespace csdelay
