#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csdelay/filter.hpp"
#include "csdelay/photon.hpp"
#include "csdelay/susceptibility.hpp"
#include "csdelay/wave.hpp"

namespace csdelay {

/// exp(i (n_c - 1) k L) with k = 2 pi nu / c: the cell transmission relative to
/// the same length of vacuum, so time axes of propagated packets are retarded
/// by L/c and the causal front sits at t = 0.
ComplexSpectrum transfer_function(const OpticalResponse& response, const VaporCell& cell);

/// Identity transfer on `grid`.
ComplexSpectrum vacuum_transfer(const FrequencyGrid& grid);

/// Makes the discrete impulse response of `transfer` vanish at negative lags.
/// A passive medium or filter is causal, but sampling its transfer function
/// on a finite band truncates the slow 1/nu wings and leaves ringing that is
/// odd about t = 0. Folding each negative lag onto its positive mirror cancels
/// the ringing on both sides and keeps the band-limited response unbiased.
/// Lags beyond half the window are dropped, so the window must be long enough
/// for the response to have died out by then.
ComplexSpectrum causal_projection(const ComplexSpectrum& transfer);

/// Inverse transform of transfer * spectrum(packet). The packet grid and the
/// transfer grid must be Fourier duals with the same center. The discrete
/// transform is circular: anything pushed past the end of the window wraps
/// around to its start.
WavePacket propagate(const WavePacket& packet, const ComplexSpectrum& transfer);

struct DiffusionOptions {
  /// Odd number of carrier-offset nodes spread uniformly over
  /// +-span_sigmas standard deviations of the diffusion Gaussian.
  std::size_t nodes = 201;
  double span_sigmas = 6.0;
  std::optional<FilterSpec> filter;
  FilterPlacement placement = FilterPlacement::field;
  /// Apply causal_projection to the cell and filter transfers first.
  bool causal = true;
  /// Also evaluate 2 * nodes - 1 nodes and report the relative change of the
  /// mean delay.
  bool check_convergence = false;
  unsigned workers = 1;

  void validate() const;
};

struct EnsembleOutput {
  IntensityTrace sample;     // after the cell
  IntensityTrace reference;  // same photons and filter, vacuum instead of the cell
  std::size_t nodes_used = 0;
  /// |delay(2n-1 nodes) / delay(n nodes) - 1|; empty unless requested.
  std::optional<double> convergence_change;
  bool converged = true;
};

/// Intensity averaged over Gaussian spectral diffusion of the carrier:
/// sum_i w_i |E_out(t; nu0 + d_i)|^2 with trapezoid weights on the uniform
/// nodes d_i (normalized to 1). inhom_fwhm = 0 collapses to a single
/// propagation. `frame` is the rotating-frame frequency of `transfer`'s grid.
EnsembleOutput average_spectral_diffusion(const PhotonSource& source, const ComplexSpectrum& transfer,
                                          const TimeGrid& time, const DiffusionOptions& options);

/// Ensemble power spectrum sum_i w_i |E_in(nu; nu0 + d_i)|^2 without cell or
/// filter, on the dual grid of `time` centered at `frame`.
std::vector<double> ensemble_power_spectrum(const PhotonSource& source, const TimeGrid& time, double frame,
                                            const DiffusionOptions& options);

/// Circular convolution with a unit-area Gaussian of the given FWHM.
IntensityTrace apply_irf(const IntensityTrace& waveform, double irf_fwhm);

/// <t>_sample - <t>_reference. Throws ZeroNormError when either trace carries
/// less than 1e-12 of the reference area, GridMismatch for different grids.
double center_of_mass_delay(const IntensityTrace& sample, const IntensityTrace& reference);

/// area(sample) / area(reference). Throws ZeroNormError for a zero reference.
double transmitted_fraction(const IntensityTrace& sample, const IntensityTrace& reference);

/// Fraction of the trace area inside the last `tail` fraction of the window.
double tail_fraction(const IntensityTrace& trace, double tail = 0.05);

/// Largest intensity at t < front divided by the overall peak.
double precursor_ratio(const IntensityTrace& trace, double front = 0.0);

struct DelayResult {
  double mean_delay = 0.0;            // s, center-of-mass difference
  double transmitted_fraction = 0.0;
  double peak_time = 0.0;             // s, argmax of the post-IRF sample
  double peak_delay = 0.0;            // s, peak_time minus the reference peak
  IntensityTrace waveform;            // post-IRF sample
  IntensityTrace reference_waveform;  // post-IRF reference
  /// More than 1e-6 of the sample sits in the last 5 % of the window.
  bool wraparound_suspect = false;
};

/// Applies the IRF and extracts the delay observables. The center of mass is
/// taken before the IRF (a symmetric kernel leaves it unchanged).
DelayResult measure_delay(const EnsembleOutput& ensemble, double irf_fwhm);

/// One curve of a spectral-delay scan.
struct ScanVariant {
  enum class Kind {
    /// Fourier-limited Lorentzian photon of `photon_fwhm` carried at nu_f.
    lorentzian_photon,
    /// The diffusion-broadened source seen through the filter tuned to nu_f.
    filtered_ensemble,
  };
  std::string name;
  Kind kind = Kind::lorentzian_photon;
  double photon_fwhm = 0.0;  // Hz, lorentzian_photon only
};

/// 153 MHz (Fourier limit of t1 = 1.04 ns), 192 MHz (filter width) and
/// 384 MHz Lorentzian photons, plus the filtered ensemble.
std::vector<ScanVariant> default_scan_variants();

struct ScanPoint {
  double nu_f_offset = 0.0;  // Hz, relative to the transfer grid center
  std::optional<double> mean_delay;
  double transmitted_fraction = 0.0;
  /// precursor_ratio of the pre-IRF sample; empty when it is fully absorbed.
  std::optional<double> precursor;
  std::string error;  // why mean_delay is missing
};

struct ScanCurve {
  ScanVariant variant;
  std::vector<ScanPoint> points;
};

struct ScanOptions {
  std::vector<double> nu_f_offsets;
  std::vector<ScanVariant> variants = default_scan_variants();
  FilterSpec filter;  // nu_f is overwritten per point
  DiffusionOptions diffusion;
  unsigned workers = 1;
};

/// Delay and transmission versus filter frequency. Fully absorbed points are
/// kept as gaps. Throws InvalidArgument when the sweep is wider than one FSR.
std::vector<ScanCurve> spectral_delay_scan(const PhotonSource& source, const ComplexSpectrum& transfer,
                                           const TimeGrid& time, const ScanOptions& options);

}  // namespace csdelay
