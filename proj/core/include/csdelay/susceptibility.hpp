#pragma once

#include <complex>
#include <filesystem>
#include <vector>

#include "csdelay/atom.hpp"
#include "csdelay/grid.hpp"
#include "csdelay/vapor.hpp"

namespace csdelay {

/// Gaussian Doppler FWHM nu_line sqrt(8 k_B T ln2 / (m c^2)) (Hz).
double doppler_fwhm(const AtomModel& model, double temperature);

/// Absorption reference used to fix AtomModel::chi_scale: the natural-log
/// optical depth `od` at the center of one hyperfine component.
struct OdAnchor {
  double temperature = 356.65;  // K (83.5 C)
  double length = 0.04;         // m
  double od = 69.0;
  int f_ground = 4;
  int f_excited = 3;
};

OdAnchor default_od_anchor();

/// chi_scale for which `model` reproduces `anchor` with thermal populations.
/// Solved by fixed-point iteration on the full sqrt(1 + chi) optical depth.
double calibrate_chi_scale(const AtomModel& model, const OdAnchor& anchor);

/// chi at one frequency offset from model.nu_line for an absorber density
/// (atoms/m^3, population factor already applied) at `temperature`.
std::complex<double> susceptibility_at(const AtomModel& model, double temperature, double density,
                                       double offset);

/// chi(nu) on `grid` (grid frequencies are absolute). Throws ResolutionError
/// when the grid spacing exceeds the natural linewidth.
ComplexSpectrum susceptibility(const AtomModel& model, const VaporCell& cell, const FrequencyGrid& grid);

/// n_c = sqrt(1 + chi), principal branch.
ComplexSpectrum refractive_index(const ComplexSpectrum& chi);

/// n_c - 1 evaluated as chi / (1 + sqrt(1 + chi)), which keeps full relative
/// precision when |chi| is tiny.
std::complex<double> index_excess(std::complex<double> chi);

struct OpticalResponse {
  ComplexSpectrum chi;
  std::vector<std::complex<double>> index_excess;  // n_c - 1
  std::vector<double> n_real;
  std::vector<double> alpha;        // 1/m, 2 k Im n_c
  std::vector<double> od;           // alpha * length
  std::vector<double> group_delay;  // s, relative to vacuum
  /// Samples whose dn/dnu came from a one-sided difference (the two edges).
  std::vector<bool> one_sided;
  double length = 0.0;  // m

  void validate() const;
};

/// Everything derived from chi for `cell`.
OpticalResponse compute_response(const AtomModel& model, const VaporCell& cell, const FrequencyGrid& grid);

/// Builds the response from a given chi (used for synthetic media in tests).
OpticalResponse response_from_chi(ComplexSpectrum chi, double length);

/// exp(-od).
std::vector<double> transmission_spectrum(const OpticalResponse& response);

struct GroupDelayProfile {
  std::vector<double> delay;  // s
  std::vector<bool> one_sided;
};

/// L (n + nu dn/dnu - 1) / c from central differences of n(nu); the two edge
/// samples use one-sided differences and are flagged.
GroupDelayProfile group_delay(const OpticalResponse& response, const VaporCell& cell);

/// Columns frequency_offset_hz, re_chi, im_chi, n_real, alpha_per_m, od,
/// transmission, group_delay_s.
void write_response_csv(const std::filesystem::path& path, const OpticalResponse& response);

}  // namespace csdelay
