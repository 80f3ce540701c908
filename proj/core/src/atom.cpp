#include "csdelay/atom.hpp"

#include <cmath>
#include <map>
#include <string>

#include "csdelay/constants.hpp"
#include "csdelay/error.hpp"
#include "csdelay/susceptibility.hpp"

namespace csdelay {

namespace {

constexpr double kGroundSplitting = 9'192'631'770.0;  // Hz, SI second definition
constexpr double kExcitedSplitting = 1'167.680e6;     // Hz, 6P1/2 F'=3 <-> F'=4
constexpr double kNaturalLinewidth = 4.575e6;         // Hz, Gamma / 2pi of 6P1/2
constexpr double kMassAmu = 132.905'451'931;

double raw_strength(const AtomModel& m, int fg, int fe) {
  const HalfInt F = HalfInt::from_twice(2 * fg);
  const HalfInt Fp = HalfInt::from_twice(2 * fe);
  const HalfInt one = HalfInt::from_twice(2);
  const double sixj = wigner6j(m.j_ground, m.j_excited, one, Fp, F, m.nuclear_spin);
  return (2.0 * fe + 1.0) * (m.j_ground.twice() + 1.0) * sixj * sixj;
}

}  // namespace

std::vector<double> line_strengths(const AtomModel& model) {
  std::map<int, double> per_ground;
  std::vector<double> raw;
  raw.reserve(model.transitions.size());
  for (const auto& tr : model.transitions) {
    raw.push_back(raw_strength(model, tr.f_ground, tr.f_excited));
    per_ground[tr.f_ground] += raw.back();
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double total = per_ground[model.transitions[i].f_ground];
    if (!(total > 0.0)) throw InvalidArgument("ground level without allowed transitions");
    raw[i] /= total;
  }
  return raw;
}

AtomModel cesium_d1() {
  AtomModel m;
  m.nu_line = constants::speed_of_light / cesium_d1_wavelength;
  m.gamma_nat = kNaturalLinewidth;
  m.mass = kMassAmu * constants::atomic_mass_unit;
  m.delta_ground = kGroundSplitting;
  m.delta_excited = kExcitedSplitting;
  m.nuclear_spin = HalfInt::from_twice(7);
  m.j_ground = HalfInt::from_twice(1);
  m.j_excited = HalfInt::from_twice(1);

  // F=3 lies delta_ground below F=4, so its transitions sit higher in frequency.
  // F'=4 lies delta_excited above F'=3.
  const double half_e = 0.5 * kExcitedSplitting;
  const double ground_states = (m.nuclear_spin.twice() + 1.0) * (m.j_ground.twice() + 1.0);
  for (int fg : {4, 3}) {
    for (int fe : {3, 4}) {
      HyperfineTransition tr;
      tr.f_ground = fg;
      tr.f_excited = fe;
      tr.detuning = (fe == 4 ? half_e : -half_e) + (fg == 3 ? kGroundSplitting : 0.0);
      tr.ground_weight = (2.0 * fg + 1.0) / ground_states;
      m.transitions.push_back(tr);
    }
  }
  const auto s = line_strengths(m);
  for (std::size_t i = 0; i < s.size(); ++i) m.transitions[i].strength = s[i];
  m.chi_scale = calibrate_chi_scale(m, default_od_anchor());
  m.validate();
  return m;
}

const HyperfineTransition& AtomModel::transition(int f_ground, int f_excited) const {
  for (const auto& tr : transitions) {
    if (tr.f_ground == f_ground && tr.f_excited == f_excited) return tr;
  }
  throw InvalidArgument("no transition F=" + std::to_string(f_ground) + " -> F'=" + std::to_string(f_excited));
}

void AtomModel::validate() const {
  if (!(nu_line > 0.0) || !(gamma_nat > 0.0) || !(mass > 0.0)) {
    throw InvalidArgument("atom model: line frequency, linewidth and mass must be positive");
  }
  if (transitions.size() != 4) throw InvalidArgument("atom model: expected exactly 4 hyperfine transitions");
  std::map<int, double> sums;
  for (const auto& tr : transitions) {
    if ((tr.f_ground != 3 && tr.f_ground != 4) || (tr.f_excited != 3 && tr.f_excited != 4)) {
      throw InvalidArgument("atom model: transitions must connect F=3,4 to F'=3,4");
    }
    if (!(tr.strength > 0.0 && tr.strength < 1.0)) {
      throw InvalidArgument("atom model: relative strengths must lie in (0, 1)");
    }
    sums[tr.f_ground] += tr.strength;
  }
  for (const auto& [f, s] : sums) {
    if (std::abs(s - 1.0) > 1e-12) {
      throw InvalidArgument("atom model: strengths for F=" + std::to_string(f) + " do not sum to 1");
    }
  }
  const auto& a = transition(4, 3);
  const auto& b = transition(4, 4);
  const auto& c = transition(3, 3);
  if (std::abs(b.detuning - a.detuning - delta_excited) > 1e-6 || std::abs(c.detuning - a.detuning - delta_ground) > 1e-6) {
    throw InvalidArgument("atom model: detunings do not reproduce the hyperfine splittings");
  }
}

}  // namespace csdelay
