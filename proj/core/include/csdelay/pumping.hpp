#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csdelay/atom.hpp"
#include "csdelay/filter.hpp"
#include "csdelay/photon.hpp"
#include "csdelay/propagation.hpp"
#include "csdelay/vapor.hpp"

namespace csdelay {

/// Two ground levels F=3, F=4 coupled by depolarizing collisions (rate gamma)
/// and an optical pump (rate P) emptying F=4.
struct PumpModel {
  double gamma = 1.0;       // 1/s
  double pump_ratio = 0.0;  // P / gamma
  std::optional<double> beta;  // m^2/W, converts an intensity to P = beta I

  void validate() const;
  double pump_rate() const { return pump_ratio * gamma; }
  /// Model with P = beta * intensity; requires beta.
  PumpModel with_intensity(double intensity) const;
};

struct Populations {
  double rho33 = 0.5;
  double rho44 = 0.5;

  void validate() const;
};

/// Thermal ground-state population of F=4 that population_factor refers to.
inline constexpr double thermal_rho44 = 0.5;

/// rho44 = 1 / (2 + P/gamma), rho33 = 1 - rho44.
Populations steady_state(const PumpModel& pump);

/// Exact solution of the rate equations: relaxation toward steady_state at
/// rate 2 gamma + P. The trace is preserved.
Populations evolve_populations(const Populations& initial, const PumpModel& pump, double t);

enum class PumpMode {
  /// population_factor = rho44 / 0.5 at unchanged temperature.
  density_scale,
  /// Replace the temperature by the one whose vapor density is reduced by
  /// rho44 / 0.5; the Doppler width follows the lower temperature.
  temperature_mimic,
};

/// Cell whose absorption reflects the pumped populations. Mimic mode throws
/// RangeError when the target density is below the vapor model window and
/// InvalidArgument when the cell uses a density override.
VaporCell effective_cell(const VaporCell& cell, const Populations& populations, PumpMode mode);

struct PumpSweepOptions {
  std::vector<double> pump_ratios = {0.5, 1.0, 2.0, 5.0, 10.0, 15.0, 30.0, 100.0};
  PumpMode mode = PumpMode::temperature_mimic;
  FilterSpec filter;  // nu_f defaults to the frame when left at 0
  double irf_fwhm = 1060e-12;
  DiffusionOptions diffusion;
  double gamma = 1.0;
};

struct PumpPoint {
  double pump_ratio = 0.0;
  double rho44 = 0.0;
  double effective_temperature = 0.0;  // K
  double transmitted_fraction = 0.0;
  std::optional<double> mean_delay;   // s
  std::optional<double> peak_delay;   // s, post-IRF peak relative to the reference peak
  std::optional<double> peak_time;    // s, post-IRF peak
  std::optional<double> precursor;    // precursor_ratio of the pre-IRF sample
  IntensityTrace waveform;            // post-IRF
  std::string error;
};

/// One propagation per pump ratio through effective_cell. The source is
/// filtered by `filter` (field placement unless options say otherwise) and the
/// IRF applied. Ratios must be ascending.
std::vector<PumpPoint> pump_sweep(const AtomModel& model, const PhotonSource& source, const VaporCell& cell,
                                  const TimeGrid& time, const PumpSweepOptions& options);

}  // namespace csdelay
