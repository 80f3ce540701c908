#pragma once

#include <complex>

#include "csdelay/grid.hpp"

namespace csdelay {

/// Single Fabry-Perot transmission line with Lorentzian intensity profile.
struct FilterSpec {
  double nu_f = 0.0;       // Hz, absolute transmission center
  double fwhm = 192e6;     // Hz
  double fsr = 37.8e9;     // Hz

  void validate() const;
};

/// Where the filter enters the spectral-diffusion average.
enum class FilterPlacement {
  /// Causal field transfer 1/(1 - 2i(nu - nu_f)/fwhm) multiplying E(nu).
  field,
  /// Lorentzian weight L(nu0_node) on the diffusion variable; the photon
  /// spectrum itself is left unfiltered.
  carrier_weight,
};

/// Field transmission at absolute frequency nu (unit peak, single pole in the
/// lower half plane so the impulse response vanishes for t < 0).
std::complex<double> filter_response(const FilterSpec& filter, double nu);

/// |filter_response|^2 = 1 / (1 + (2 (nu - nu_f)/fwhm)^2).
double filter_weight(const FilterSpec& filter, double nu);

/// filter_response sampled on `grid`.
ComplexSpectrum filter_transfer(const FilterSpec& filter, const FrequencyGrid& grid);

/// The model keeps one transmission line only; true when the grid is wide
/// enough to see neighbouring orders of a real resonator.
bool exceeds_free_spectral_range(const FilterSpec& filter, const FrequencyGrid& grid);

/// nu_f = nu_ref + correction * coefficient * delta_theta. The correction
/// accounts for a resonator that had not fully thermalized.
double filter_frequency_from_temperature(double nu_ref, double delta_theta, double coefficient,
                                         double correction = 1.0);

}  // namespace csdelay
