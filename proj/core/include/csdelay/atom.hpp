#pragma once

#include <vector>

#include "csdelay/angular.hpp"

namespace csdelay {

/// One hyperfine component F -> F' of the D1 line.
struct HyperfineTransition {
  int f_ground = 0;
  int f_excited = 0;
  /// Transition frequency relative to nu0, the midpoint of F=4->F'=3 and
  /// F=4->F'=4 (Hz).
  double detuning = 0.0;
  /// Relative line strength; the components sharing a ground F sum to 1.
  double strength = 0.0;
  /// Thermal fraction of atoms in the ground level F, (2F+1)/((2I+1)(2J+1)).
  double ground_weight = 0.0;
};

/// Cesium D1 (6S1/2 -> 6P1/2) structure used by the susceptibility model.
struct AtomModel {
  double nu_line = 0.0;        ///< optical frequency of the line reference nu0 (Hz)
  double gamma_nat = 0.0;      ///< natural linewidth of 6P1/2, FWHM (Hz)
  double mass = 0.0;           ///< atomic mass (kg)
  double delta_ground = 0.0;   ///< 6S1/2 F=3/F=4 splitting (Hz)
  double delta_excited = 0.0;  ///< 6P1/2 F'=3/F'=4 splitting (Hz)
  /// Absolute susceptibility scale d_eff^2 / (2 pi eps0 hbar) (m^3 Hz): chi of
  /// one component is chi_scale * density * weight * strength * (complex
  /// lineshape in 1/Hz). Fixed by calibrate_chi_scale.
  double chi_scale = 0.0;
  HalfInt nuclear_spin;
  HalfInt j_ground;
  HalfInt j_excited;
  std::vector<HyperfineTransition> transitions;

  /// Checks the structural invariants (four components, sum rule, detunings).
  void validate() const;

  /// Throws InvalidArgument when the pair is not part of the model.
  const HyperfineTransition& transition(int f_ground, int f_excited) const;
};

/// 133Cs D1 line. Level splittings, linewidth and mass from the standard
/// cesium data tables (D. A. Steck, "Cesium D Line Data"); the line
/// frequency is derived from the 894.335 nm reference wavelength.
/// `chi_scale` is calibrated against default_od_anchor().
AtomModel cesium_d1();

/// Relative strengths S(F->F') = (2F'+1)(2J+1){J J' 1; F' F I}^2,
/// normalized per ground F, in the order of `model.transitions`.
std::vector<double> line_strengths(const AtomModel& model);

/// Wavelength (m) used to derive `cesium_d1().nu_line`.
inline constexpr double cesium_d1_wavelength = 894.335e-9;

}  // namespace csdelay
