#include "csdelay/photon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csdelay/constants.hpp"
#include "csdelay/error.hpp"

namespace csdelay {

void PhotonSource::validate() const {
  if (!(t1 > 0.0) || !std::isfinite(t1)) throw InvalidArgument("photon source: t1 must be positive");
  if (!std::isfinite(nu0)) throw InvalidArgument("photon source: nu0 must be finite");
  if (!(inhom_fwhm >= 0.0) || !std::isfinite(inhom_fwhm)) {
    throw InvalidArgument("photon source: inhom_fwhm must be non-negative");
  }
}

double PhotonSource::homogeneous_fwhm() const { return 1.0 / (2.0 * constants::pi * t1); }

double lifetime_for_fwhm(double fwhm) {
  if (!(fwhm > 0.0)) throw InvalidArgument("photon bandwidth must be positive");
  return 1.0 / (2.0 * constants::pi * fwhm);
}

WavePacket make_photon(const PhotonSource& source, const TimeGrid& grid, double frame_frequency,
                       double carrier_shift) {
  source.validate();
  grid.validate();
  if (grid.step > source.t1 / 50.0) {
    throw ResolutionError("time step " + std::to_string(grid.step) + " s does not resolve t1/50");
  }
  const double t_end = grid.time(grid.n_points - 1);
  if (grid.start > 0.0 || t_end < 20.0 * source.t1) {
    throw ResolutionError("time window must contain t = 0 and at least 20 t1 after it");
  }
  const double detuning = source.nu0 + carrier_shift - frame_frequency;
  WavePacket p{grid, frame_frequency, std::vector<std::complex<double>>(grid.n_points)};
  for (std::size_t m = 0; m < grid.n_points; ++m) {
    const double t = grid.time(m);
    if (t < -1e-6 * grid.step) continue;
    const double theta = std::abs(t) <= 1e-6 * grid.step ? 0.5 : 1.0;
    p.field[m] = theta * std::exp(-t / (2.0 * source.t1)) *
                 std::polar(1.0, -2.0 * constants::pi * detuning * t);
  }
  const double norm = std::sqrt(p.energy());
  for (auto& e : p.field) e /= norm;
  return p;
}

double profile_fwhm(const std::vector<double>& y, double dx) {
  if (y.size() < 3) throw InvalidArgument("profile_fwhm: need at least three samples");
  const auto peak_it = std::max_element(y.begin(), y.end());
  const std::size_t peak = static_cast<std::size_t>(peak_it - y.begin());
  const double half = 0.5 * *peak_it;
  if (!(half > 0.0)) throw ZeroNormError("profile_fwhm: profile is identically zero");
  std::size_t r = peak;
  while (r + 1 < y.size() && y[r + 1] > half) ++r;
  std::size_t l = peak;
  while (l > 0 && y[l - 1] > half) --l;
  if (r + 1 >= y.size() || l == 0) throw RangeError("profile_fwhm: half maximum not reached inside the window");
  const double xr = static_cast<double>(r) + (y[r] - half) / (y[r] - y[r + 1]);
  const double xl = static_cast<double>(l) - (y[l] - half) / (y[l] - y[l - 1]);
  return (xr - xl) * dx;
}

double spectral_fwhm(const ComplexSpectrum& spectrum) {
  spectrum.validate();
  std::vector<double> power(spectrum.values.size());
  for (std::size_t j = 0; j < power.size(); ++j) power[j] = std::norm(spectrum.values[j]);
  return profile_fwhm(power, spectrum.grid.spacing());
}

}  // namespace csdelay
