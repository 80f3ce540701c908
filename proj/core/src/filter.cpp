#include "csdelay/filter.hpp"

#include <cmath>

#include "csdelay/error.hpp"

namespace csdelay {

void FilterSpec::validate() const {
  if (!(fwhm > 0.0) || !std::isfinite(fwhm)) throw InvalidArgument("filter: fwhm must be positive");
  if (!(fsr > fwhm) || !std::isfinite(fsr)) throw InvalidArgument("filter: fsr must exceed fwhm");
  if (!std::isfinite(nu_f)) throw InvalidArgument("filter: nu_f must be finite");
}

std::complex<double> filter_response(const FilterSpec& filter, double nu) {
  return 1.0 / std::complex<double>(1.0, -2.0 * (nu - filter.nu_f) / filter.fwhm);
}

double filter_weight(const FilterSpec& filter, double nu) {
  const double x = 2.0 * (nu - filter.nu_f) / filter.fwhm;
  return 1.0 / (1.0 + x * x);
}

ComplexSpectrum filter_transfer(const FilterSpec& filter, const FrequencyGrid& grid) {
  filter.validate();
  grid.validate();
  ComplexSpectrum out{grid, std::vector<std::complex<double>>(grid.n_points)};
  for (std::size_t j = 0; j < grid.n_points; ++j) out.values[j] = filter_response(filter, grid.frequency(j));
  return out;
}

bool exceeds_free_spectral_range(const FilterSpec& filter, const FrequencyGrid& grid) {
  return grid.span > filter.fsr;
}

double filter_frequency_from_temperature(double nu_ref, double delta_theta, double coefficient, double correction) {
  if (coefficient == 0.0 || !std::isfinite(coefficient)) throw InvalidArgument("tuning coefficient must be nonzero");
  if (!(correction > 0.0 && correction <= 1.0)) throw InvalidArgument("tuning correction must lie in (0, 1]");
  return nu_ref + correction * coefficient * delta_theta;
}

}  // namespace csdelay
