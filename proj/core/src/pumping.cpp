#include "csdelay/pumping.hpp"

#include <cmath>

#include "csdelay/error.hpp"
#include "csdelay/susceptibility.hpp"

namespace csdelay {

void PumpModel::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidArgument("pump model: gamma must be positive");
  if (!(pump_ratio >= 0.0) || !std::isfinite(pump_ratio)) {
    throw InvalidArgument("pump model: pump ratio must be non-negative");
  }
  if (beta && !(*beta >= 0.0)) throw InvalidArgument("pump model: beta must be non-negative");
}

PumpModel PumpModel::with_intensity(double intensity) const {
  if (!beta) throw InvalidArgument("pump model: beta is required to convert an intensity");
  if (!(intensity >= 0.0)) throw InvalidArgument("pump intensity must be non-negative");
  PumpModel m = *this;
  m.pump_ratio = *beta * intensity / gamma;
  return m;
}

void Populations::validate() const {
  if (!(rho33 >= 0.0 && rho33 <= 1.0 && rho44 >= 0.0 && rho44 <= 1.0)) {
    throw InvalidArgument("populations must lie in [0, 1]");
  }
  if (std::abs(rho33 + rho44 - 1.0) > 1e-12) throw InvalidArgument("populations must sum to 1");
}

Populations steady_state(const PumpModel& pump) {
  pump.validate();
  const double rho44 = 1.0 / (2.0 + pump.pump_ratio);
  return {1.0 - rho44, rho44};
}

Populations evolve_populations(const Populations& initial, const PumpModel& pump, double t) {
  initial.validate();
  if (!(t >= 0.0)) throw InvalidArgument("evolution time must be non-negative");
  const double bar = steady_state(pump).rho44;
  const double rate = 2.0 * pump.gamma + pump.pump_rate();
  const double rho44 = bar + (initial.rho44 - bar) * std::exp(-rate * t);
  const double trace = initial.rho33 + initial.rho44;
  return {trace - rho44, rho44};
}

VaporCell effective_cell(const VaporCell& cell, const Populations& populations, PumpMode mode) {
  cell.validate();
  populations.validate();
  const double ratio = populations.rho44 / thermal_rho44;
  VaporCell out = cell;
  if (mode == PumpMode::density_scale) {
    out.population_factor = cell.population_factor * ratio;
    return out;
  }
  if (ratio == 1.0) return out;
  if (cell.density_override) {
    throw InvalidArgument("temperature-mimic mode needs the vapor-pressure model, not a density override");
  }
  out.temperature = temperature_for_density(number_density(cell.temperature) * ratio);
  return out;
}

std::vector<PumpPoint> pump_sweep(const AtomModel& model, const PhotonSource& source, const VaporCell& cell,
                                  const TimeGrid& time, const PumpSweepOptions& options) {
  if (options.pump_ratios.empty()) throw InvalidArgument("pump sweep: no pump ratios");
  for (std::size_t i = 1; i < options.pump_ratios.size(); ++i) {
    if (!(options.pump_ratios[i] > options.pump_ratios[i - 1])) {
      throw InvalidArgument("pump sweep: ratios must be strictly ascending");
    }
  }
  const FrequencyGrid grid = dual_grid(time, model.nu_line);
  DiffusionOptions diff = options.diffusion;
  FilterSpec filter = options.filter;
  if (filter.nu_f == 0.0) filter.nu_f = model.nu_line;
  diff.filter = filter;

  std::vector<PumpPoint> points;
  points.reserve(options.pump_ratios.size());
  for (double ratio : options.pump_ratios) {
    PumpModel pump{options.gamma, ratio, std::nullopt};
    const Populations pops = steady_state(pump);
    const VaporCell eff = effective_cell(cell, pops, options.mode);
    const OpticalResponse response = compute_response(model, eff, grid);
    const ComplexSpectrum transfer = transfer_function(response, eff);
    const EnsembleOutput e = average_spectral_diffusion(source, transfer, time, diff);

    PumpPoint p;
    p.pump_ratio = ratio;
    p.rho44 = pops.rho44;
    p.effective_temperature = eff.temperature;
    p.transmitted_fraction = transmitted_fraction(e.sample, e.reference);
    try {
      DelayResult d = measure_delay(e, options.irf_fwhm);
      p.mean_delay = d.mean_delay;
      p.peak_delay = d.peak_delay;
      p.peak_time = d.peak_time;
      p.precursor = precursor_ratio(e.sample);
      p.waveform = std::move(d.waveform);
    } catch (const ZeroNormError& err) {
      p.error = err.what();
      p.waveform = apply_irf(e.sample, options.irf_fwhm);
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace csdelay
