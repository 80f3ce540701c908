#pragma once

#include <optional>

namespace csdelay {

/// Heated vapor cell. `population_factor` is rho44_bar / rho44_thermal and
/// scales the absorbing density; 1 means thermal ground-state populations.
struct VaporCell {
  double length = 0.04;       // m
  double temperature = 0.0;   // K
  std::optional<double> density_override;  // atoms/m^3, bypasses the vapor-pressure model
  double population_factor = 1.0;

  void validate() const;
};

/// Validity window of the vapor-pressure correlation (K).
inline constexpr double vapor_model_t_min = 250.0;
inline constexpr double vapor_model_t_max = 500.0;

/// Saturated Cs vapor pressure (Pa).
///
/// Taylor & Langmuir, Phys. Rev. 51, 753 (1937):
///   log10(p / Torr) = 11.0531 - 1.35 log10(T) - 4041 / T
/// A single expression for both phases, so the density has no kink at the
/// 301.6 K melting point. Throws RangeError outside [250 K, 500 K].
double vapor_pressure(double temperature);

/// Ideal-gas atom density p / (k_B T) (atoms/m^3).
double number_density(double temperature);

/// Density used for absorption: override if set, otherwise number_density(T).
/// Does not include population_factor.
double cell_density(const VaporCell& cell);

/// Inverts number_density by bisection. Throws RangeError when `density` is
/// outside the values reachable inside the validity window.
double temperature_for_density(double density, double tolerance = 1e-6);

}  // namespace csdelay
