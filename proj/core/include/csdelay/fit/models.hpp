#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csdelay/atom.hpp"
#include "csdelay/fit/histogram.hpp"
#include "csdelay/fit/levmar.hpp"
#include "csdelay/vapor.hpp"

namespace csdelay::fit {

enum class Weighting {
  uniform,
  /// sigma_i = sqrt(max(y_i, 1)), for raw counts.
  poisson,
  /// Uses Histogram1D::sigma; zero entries are treated as 1.
  data_sigma,
};

struct FitOptions {
  Weighting weighting = Weighting::uniform;
  LmOptions lm;
};

struct FitParameter {
  std::string name;
  double value = 0.0;
  double uncertainty = 0.0;  // 1 sigma; +inf when unconstrained
  std::string unit;
};

struct FitResult {
  std::string model;
  std::vector<FitParameter> parameters;
  /// Quantities computed from the parameters (no uncertainty propagated).
  std::vector<std::pair<std::string, double>> derived;
  double residual_norm = 0.0;          // sqrt(sum of squared weighted residuals)
  double initial_residual_norm = 0.0;  // same at the initial guess
  bool converged = false;
  /// Set whenever converged is false; estimates should not be trusted.
  bool provisional = true;
  int iterations = 0;
  std::string message;
  std::vector<std::string> flags;
  /// Best-fit model at the data centers.
  std::vector<double> model_curve;

  /// Throws InvalidArgument for an unknown name.
  const FitParameter& parameter(const std::string& name) const;
  double value(const std::string& name) const { return parameter(name).value; }
  std::optional<double> derived_value(const std::string& name) const;
  bool has_flag(const std::string& flag) const;
};

// ---- model functions (double precision, shared with data generators) ----

/// Unit-height exponential decay exp(-u/tau) Theta(u) convolved with a
/// unit-area Gaussian of standard deviation sigma (sigma = 0 gives the bare
/// exponential).
double exp_gauss(double u, double tau, double sigma);

/// amplitude * exp_gauss(t - t0, t1, irf) + background.
double lifetime_model(double t, double t1, double amplitude, double background, double t0, double irf_fwhm);

/// amplitude * V(x - center) / V(0) + offset + slope (x - x_ref), V a Voigt
/// profile with the given Gaussian and Lorentzian FWHMs.
double voigt_scan_model(double x, double gauss_fwhm, double lorentz_fwhm, double center, double amplitude,
                        double slope, double offset, double x_ref);

/// amplitude [1 - (1 - g0) exp(-|tau|/dip_time)] convolved with the IRF.
double g2_model(double tau, double g0, double dip_time, double amplitude, double irf_fwhm);

/// g2_model at tau = 0 for unit amplitude: 1 - (1 - g0) erfcx(sigma / (sqrt2 dip_time)).
double g2_measured(double g0, double dip_time, double irf_fwhm);

/// Count rate of a Voigt-shaped source scanned across the cell transmission:
/// amplitude * sum_k V(u_k) T(x + u_k + frequency_offset) / sum_k V(u_k)
/// + offset + slope (x - x_ref). T is precomputed on a fine grid and
/// interpolated; the kernel grid u_k has spacing min(data spacing / 4, 20 MHz).
class TransmissionScanModel {
 public:
  /// Covers scan positions in [x_min, x_max] (Hz from the line reference)
  /// with kernel half-width `kernel_half_width`.
  TransmissionScanModel(const AtomModel& model, const VaporCell& cell, double x_min, double x_max,
                        double data_spacing, double kernel_half_width);

  /// Raw cell transmission exp(-od) at `offset` Hz, linearly interpolated.
  double transmission(double offset) const;

  /// With both widths zero the kernel is a delta and the result is the raw
  /// transmission (times amplitude, plus the linear term).
  double evaluate(double x, double gauss_fwhm, double lorentz_fwhm, double amplitude, double slope, double offset,
                  double frequency_offset, double x_ref) const;

  double kernel_spacing() const { return kernel_step_; }
  double kernel_half_width() const { return kernel_half_width_; }

  // Used by the fitter.
  const std::vector<double>& table() const { return table_; }
  double table_start() const { return table_start_; }
  double table_step() const { return table_step_; }
  std::size_t kernel_points() const { return kernel_points_; }

 private:
  std::vector<double> table_;
  double table_start_ = 0.0;
  double table_step_ = 0.0;
  double kernel_step_ = 0.0;
  double kernel_half_width_ = 0.0;
  std::size_t kernel_points_ = 0;
};

// ---- residuals ----

// Weighted residuals (model - data) / sigma used by the fits below, with
// forward-mode derivatives when a Jacobian is requested. Parameters are in
// the order of the corresponding FitResult.
ResidualFn lifetime_residuals(const Histogram1D& data, double irf_fwhm, Weighting weighting = Weighting::uniform);
ResidualFn voigt_scan_residuals(const Histogram1D& data, double lorentz_fwhm,
                                Weighting weighting = Weighting::uniform);
ResidualFn g2_residuals(const Histogram1D& data, double irf_fwhm, Weighting weighting = Weighting::uniform);
ResidualFn transmission_scan_residuals(const Histogram1D& data, const AtomModel& model, const VaporCell& cell,
                                       double lorentz_fwhm, Weighting weighting = Weighting::uniform);

// ---- fits ----

/// Parameters t1 [s], amplitude, background, t0 [s]. Initial guesses: the
/// background from the earliest tenth of the bins, t1 from the 1/e point
/// after the maximum, t0 slightly before the maximum.
FitResult fit_lifetime(const Histogram1D& data, double irf_fwhm, const FitOptions& options = {});

/// Parameters gauss_fwhm [Hz], center [Hz], amplitude, slope [1/Hz],
/// offset. Derived: voigt_fwhm (Olivero-Longbothum). Flag
/// "gauss_fwhm_at_boundary" when the Gaussian width is below 5 % of the
/// Lorentzian width, i.e. indistinguishable from a pure Lorentzian.
FitResult fit_voigt_scan(const Histogram1D& data, double lorentz_fwhm, const FitOptions& options = {});

/// Parameters g0_deconv, dip_time [s], amplitude. Derived: g0_measured.
/// Throws InvalidArgument when the long-delay plateau is not within 25 % of 1
/// (the histogram must be normalized first, see normalize_to_plateau).
FitResult fit_g2(const Histogram1D& data, double irf_fwhm, const FitOptions& options = {});

/// Parameters gauss_fwhm [Hz], amplitude, slope [1/Hz], offset,
/// frequency_offset [Hz]. Derived: voigt_fwhm.
FitResult fit_transmission_scan(const Histogram1D& data, const AtomModel& model, const VaporCell& cell,
                                double lorentz_fwhm, const FitOptions& options = {});

}  // namespace csdelay::fit
