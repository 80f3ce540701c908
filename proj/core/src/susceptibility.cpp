#include "csdelay/susceptibility.hpp"

#include <cmath>
#include <string>

#include "csdelay/constants.hpp"
#include "csdelay/csv.hpp"
#include "csdelay/error.hpp"
#include "csdelay/faddeeva.hpp"

namespace csdelay {

namespace {

std::vector<double> group_delay_from_index(const FrequencyGrid& grid, const std::vector<std::complex<double>>& excess,
                                           double length, std::vector<bool>& one_sided) {
  const std::size_t n = grid.n_points;
  const double df = grid.spacing();
  std::vector<double> out(n);
  one_sided.assign(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    double dn = 0.0;
    if (j == 0) {
      dn = (excess[1].real() - excess[0].real()) / df;
      one_sided[j] = true;
    } else if (j == n - 1) {
      dn = (excess[n - 1].real() - excess[n - 2].real()) / df;
      one_sided[j] = true;
    } else {
      dn = (excess[j + 1].real() - excess[j - 1].real()) / (2.0 * df);
    }
    out[j] = length * (excess[j].real() + grid.frequency(j) * dn) / constants::speed_of_light;
  }
  return out;
}

}  // namespace

double doppler_fwhm(const AtomModel& model, double temperature) {
  if (temperature < 0.0) throw InvalidArgument("doppler_fwhm: negative temperature");
  const double c = constants::speed_of_light;
  return model.nu_line *
         std::sqrt(8.0 * constants::boltzmann * temperature * std::log(2.0) / (model.mass * c * c));
}

OdAnchor default_od_anchor() { return OdAnchor{}; }

std::complex<double> susceptibility_at(const AtomModel& model, double temperature, double density, double offset) {
  if (density == 0.0) return {0.0, 0.0};
  const double sigma = doppler_fwhm(model, temperature) / constants::gaussian_fwhm_per_sigma;
  const double s2 = std::sqrt(2.0) * sigma;
  const double half_gamma = 0.5 * model.gamma_nat;
  const std::complex<double> i_sqrt_pi(0.0, std::sqrt(constants::pi));
  std::complex<double> sum{0.0, 0.0};
  for (const auto& tr : model.transitions) {
    const std::complex<double> z((offset - tr.detuning) / s2, half_gamma / s2);
    sum += tr.ground_weight * tr.strength * faddeeva(z);
  }
  return model.chi_scale * density * i_sqrt_pi * sum / s2;
}

double calibrate_chi_scale(const AtomModel& model, const OdAnchor& anchor) {
  if (!(anchor.od > 0.0) || !(anchor.length > 0.0)) throw InvalidArgument("OD anchor must be positive");
  AtomModel m = model;
  m.chi_scale = 1.0;
  const double offset = model.transition(anchor.f_ground, anchor.f_excited).detuning;
  const double density = number_density(anchor.temperature);
  const double k = 2.0 * constants::pi * (model.nu_line + offset) / constants::speed_of_light;
  const auto od_for = [&](double scale) {
    m.chi_scale = scale;
    const auto chi = susceptibility_at(m, anchor.temperature, density, offset);
    return 2.0 * k * index_excess(chi).imag() * anchor.length;
  };
  // Linear start (od = k L Im chi), then rescale until sqrt(1 + chi) agrees.
  m.chi_scale = 1.0;
  double scale = anchor.od / (k * anchor.length * susceptibility_at(m, anchor.temperature, density, offset).imag());
  for (int it = 0; it < 100; ++it) {
    const double od = od_for(scale);
    const double next = scale * anchor.od / od;
    if (std::abs(next - scale) <= 1e-15 * scale) return next;
    scale = next;
  }
  throw ConvergenceError("chi_scale calibration did not converge");
}

ComplexSpectrum susceptibility(const AtomModel& model, const VaporCell& cell, const FrequencyGrid& grid) {
  grid.validate();
  if (grid.spacing() > model.gamma_nat) {
    throw ResolutionError("frequency spacing " + std::to_string(grid.spacing()) +
                          " Hz does not resolve the natural linewidth");
  }
  const double density = cell_density(cell) * cell.population_factor;
  ComplexSpectrum out{grid, std::vector<std::complex<double>>(grid.n_points)};
  for (std::size_t j = 0; j < grid.n_points; ++j) {
    out.values[j] = susceptibility_at(model, cell.temperature, density, grid.frequency(j) - model.nu_line);
  }
  return out;
}

std::complex<double> index_excess(std::complex<double> chi) { return chi / (1.0 + std::sqrt(1.0 + chi)); }

ComplexSpectrum refractive_index(const ComplexSpectrum& chi) {
  ComplexSpectrum out = chi;
  for (auto& v : out.values) v = std::sqrt(1.0 + v);
  return out;
}

void OpticalResponse::validate() const {
  chi.validate();
  const std::size_t n = chi.grid.n_points;
  if (index_excess.size() != n || n_real.size() != n || alpha.size() != n || od.size() != n ||
      group_delay.size() != n || one_sided.size() != n) {
    throw GridMismatch("optical response arrays do not match the grid");
  }
}

OpticalResponse response_from_chi(ComplexSpectrum chi, double length) {
  chi.validate();
  if (!(length > 0.0)) throw InvalidArgument("response: length must be positive");
  const std::size_t n = chi.grid.n_points;
  OpticalResponse r;
  r.length = length;
  r.index_excess.resize(n);
  r.n_real.resize(n);
  r.alpha.resize(n);
  r.od.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto ex = index_excess(chi.values[j]);
    const double k = 2.0 * constants::pi * chi.grid.frequency(j) / constants::speed_of_light;
    r.index_excess[j] = ex;
    r.n_real[j] = 1.0 + ex.real();
    r.alpha[j] = 2.0 * k * ex.imag();
    r.od[j] = r.alpha[j] * length;
  }
  r.group_delay = group_delay_from_index(chi.grid, r.index_excess, length, r.one_sided);
  r.chi = std::move(chi);
  return r;
}

OpticalResponse compute_response(const AtomModel& model, const VaporCell& cell, const FrequencyGrid& grid) {
  return response_from_chi(susceptibility(model, cell, grid), cell.length);
}

std::vector<double> transmission_spectrum(const OpticalResponse& response) {
  std::vector<double> out(response.od.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::exp(-response.od[j]);
  return out;
}

GroupDelayProfile group_delay(const OpticalResponse& response, const VaporCell& cell) {
  response.validate();
  cell.validate();
  GroupDelayProfile p;
  p.delay = group_delay_from_index(response.chi.grid, response.index_excess, cell.length, p.one_sided);
  return p;
}

void write_response_csv(const std::filesystem::path& path, const OpticalResponse& response) {
  response.validate();
  const auto tr = transmission_spectrum(response);
  const std::size_t n = response.chi.grid.n_points;
  CsvTable table({"frequency_offset_hz", "re_chi", "im_chi", "n_real", "alpha_per_m", "od", "transmission",
                  "group_delay_s"});
  for (std::size_t j = 0; j < n; ++j) {
    table.add_row({response.chi.grid.offset(j), response.chi.values[j].real(), response.chi.values[j].imag(),
                   response.n_real[j], response.alpha[j], response.od[j], tr[j], response.group_delay[j]});
  }
  table.write(path);
}

}  // namespace csdelay
