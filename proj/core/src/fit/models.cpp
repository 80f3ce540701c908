#include "csdelay/fit/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <type_traits>

#include "csdelay/constants.hpp"
#include "csdelay/error.hpp"
#include "csdelay/faddeeva.hpp"
#include "csdelay/fit/dual.hpp"
#include "csdelay/susceptibility.hpp"

namespace csdelay::fit {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kTwoOverSqrtPi = 2.0 / std::sqrt(constants::pi);

double sigma_of(double fwhm) { return fwhm / constants::gaussian_fwhm_per_sigma; }

// ---- special functions lifted to dual numbers ----

double erfc_t(double x) { return std::erfc(x); }
double erfcx_t(double x) { return erfcx(x); }
template <std::size_t N>
Dual<N> erfc_t(const Dual<N>& x) {
  return chain(x, std::erfc(x.v), -kTwoOverSqrtPi * std::exp(-x.v * x.v));
}
template <std::size_t N>
Dual<N> erfcx_t(const Dual<N>& x) {
  const double e = erfcx(x.v);
  return chain(x, e, 2.0 * x.v * e - kTwoOverSqrtPi);
}

// Real part of w(re + i im).
double re_w(double re, double im) { return faddeeva({re, im}).real(); }
template <std::size_t N>
Dual<N> re_w(const Dual<N>& re, const Dual<N>& im) {
  const std::complex<double> z(re.v, im.v);
  const std::complex<double> wp = faddeeva_derivative(z);
  Dual<N> r(faddeeva(z).real());
  for (std::size_t i = 0; i < N; ++i) r.d[i] = wp.real() * re.d[i] - wp.imag() * im.d[i];
  return r;
}

template <class T>
T exp_gauss_t(const T& u, const T& tau, double sigma) {
  using std::exp;
  if (sigma == 0.0) return value_of(u) < 0.0 ? T(0.0) : exp(-u / tau);
  const T b = (sigma / tau - u / sigma) / kSqrt2;
  if (value_of(b) >= 0.0) return 0.5 * exp(-u * u / (2.0 * sigma * sigma)) * erfcx_t(b);
  return 0.5 * exp(sigma * sigma / (2.0 * tau * tau) - u / tau) * erfc_t(b);
}

template <class T>
T voigt_peak_normalized(const T& dx, const T& gauss_fwhm, double lorentz_fwhm) {
  const T s2 = gauss_fwhm / constants::gaussian_fwhm_per_sigma * kSqrt2;
  const T im = T(0.5 * lorentz_fwhm) / s2;
  return re_w(dx / s2, im) / erfcx_t(im);
}

// ---- generic driver ----

struct ParamSpec {
  const char* name;
  const char* unit;
};

std::vector<double> inverse_sigma(const Histogram1D& h, Weighting weighting) {
  std::vector<double> inv(h.size(), 1.0);
  if (weighting == Weighting::poisson) {
    for (std::size_t i = 0; i < h.size(); ++i) inv[i] = 1.0 / std::sqrt(std::max(h.values[i], 1.0));
  } else if (weighting == Weighting::data_sigma) {
    if (!h.sigma) throw InvalidArgument("data_sigma weighting requested but the histogram has no sigma column");
    for (std::size_t i = 0; i < h.size(); ++i) inv[i] = (*h.sigma)[i] > 0.0 ? 1.0 / (*h.sigma)[i] : 1.0;
  }
  return inv;
}

// Model functors own their inputs so that the residual closures outlive the
// histogram they were built from.
template <std::size_t N, class Model>
ResidualFn make_residuals(const Histogram1D& h, Model model, Weighting weighting) {
  h.validate();
  return [model = std::move(model), y = h.values, inv_sigma = inverse_sigma(h, weighting)](
             const std::vector<double>& p, std::vector<double>& r, std::vector<double>* jac) {
    using D = Dual<N>;
    const std::size_t m = y.size();
    if (p.size() != N || r.size() != m) throw InvalidArgument("residual function: wrong parameter or residual count");
    if (jac == nullptr) {
      std::array<double, N> pa;
      std::copy(p.begin(), p.end(), pa.begin());
      std::vector<double> v(m);
      model(pa, v);
      for (std::size_t i = 0; i < m; ++i) r[i] = (v[i] - y[i]) * inv_sigma[i];
      return;
    }
    std::array<D, N> pd;
    for (std::size_t j = 0; j < N; ++j) pd[j] = D::variable(p[j], j);
    std::vector<D> v(m);
    model(pd, v);
    jac->resize(m * N);
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = (v[i].v - y[i]) * inv_sigma[i];
      for (std::size_t j = 0; j < N; ++j) (*jac)[i * N + j] = v[i].d[j] * inv_sigma[i];
    }
  };
}

template <std::size_t N, class Model>
FitResult run_fit(const char* model_name, const Histogram1D& h, const Model& model, std::array<double, N> p0,
                  const std::array<double, N>& lo, const std::array<double, N>& hi,
                  const std::array<ParamSpec, N>& spec, const FitOptions& options) {
  const ResidualFn fn = make_residuals<N>(h, model, options.weighting);
  const std::size_t m = h.size();
  const LmResult lm = levenberg_marquardt(fn, m, std::vector<double>(p0.begin(), p0.end()),
                                          std::vector<double>(lo.begin(), lo.end()),
                                          std::vector<double>(hi.begin(), hi.end()), options.lm);
  FitResult out;
  out.model = model_name;
  for (std::size_t j = 0; j < N; ++j) {
    out.parameters.push_back({spec[j].name, lm.params[j], std::sqrt(lm.covariance[j * N + j]), spec[j].unit});
  }
  out.residual_norm = std::sqrt(lm.cost);
  out.initial_residual_norm = std::sqrt(lm.initial_cost);
  out.converged = lm.converged;
  out.provisional = !lm.converged;
  out.iterations = lm.iterations;
  out.message = lm.message;
  std::array<double, N> best;
  std::copy(lm.params.begin(), lm.params.end(), best.begin());
  out.model_curve.resize(m);
  model(best, out.model_curve);
  for (std::size_t j = 0; j < N; ++j) {
    if (lm.params[j] <= lo[j] || lm.params[j] >= hi[j]) out.flags.push_back(std::string(spec[j].name) + "_at_bound");
  }
  return out;
}

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

double range_of(const Histogram1D& h) { return h.centers.back() - h.centers.front(); }

// Linear term and offset guesses from the two ends of the scan.
void linear_guess(const Histogram1D& h, double& slope, double& offset) {
  const std::size_t k = std::max<std::size_t>(1, h.size() / 10);
  double left = 0.0;
  double right = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    left += h.values[i];
    right += h.values[h.size() - 1 - i];
  }
  left /= static_cast<double>(k);
  right /= static_cast<double>(k);
  slope = (right - left) / range_of(h);
  offset = 0.5 * (left + right);
}

}  // namespace

// ---- FitResult ----

const FitParameter& FitResult::parameter(const std::string& name) const {
  for (const auto& p : parameters) {
    if (p.name == name) return p;
  }
  throw InvalidArgument("fit result has no parameter '" + name + "'");
}

std::optional<double> FitResult::derived_value(const std::string& name) const {
  for (const auto& [k, v] : derived) {
    if (k == name) return v;
  }
  return std::nullopt;
}

bool FitResult::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

// ---- public model functions ----

double exp_gauss(double u, double tau, double sigma) {
  if (!(tau > 0.0) || sigma < 0.0) throw InvalidArgument("exp_gauss: tau must be positive, sigma non-negative");
  return exp_gauss_t(u, tau, sigma);
}

double lifetime_model(double t, double t1, double amplitude, double background, double t0, double irf_fwhm) {
  return amplitude * exp_gauss(t - t0, t1, sigma_of(irf_fwhm)) + background;
}

double voigt_scan_model(double x, double gauss_fwhm, double lorentz_fwhm, double center, double amplitude,
                        double slope, double offset, double x_ref) {
  if (!(gauss_fwhm > 0.0) || !(lorentz_fwhm > 0.0)) throw InvalidArgument("voigt_scan_model: widths must be positive");
  return amplitude * voigt_peak_normalized(x - center, gauss_fwhm, lorentz_fwhm) + offset + slope * (x - x_ref);
}

double g2_model(double tau, double g0, double dip_time, double amplitude, double irf_fwhm) {
  const double s = sigma_of(irf_fwhm);
  const double k = exp_gauss(tau, dip_time, s) + exp_gauss(-tau, dip_time, s);
  return amplitude * (1.0 - (1.0 - g0) * k);
}

double g2_measured(double g0, double dip_time, double irf_fwhm) {
  return 1.0 - (1.0 - g0) * erfcx(sigma_of(irf_fwhm) / (kSqrt2 * dip_time));
}

// ---- transmission scan model ----

TransmissionScanModel::TransmissionScanModel(const AtomModel& model, const VaporCell& cell, double x_min,
                                             double x_max, double data_spacing, double kernel_half_width) {
  if (!(x_max > x_min) || !(data_spacing > 0.0) || !(kernel_half_width >= 0.0)) {
    throw InvalidArgument("transmission scan model: invalid scan geometry");
  }
  kernel_step_ = std::min(data_spacing / 4.0, 20e6);
  kernel_points_ = static_cast<std::size_t>(std::ceil(kernel_half_width / kernel_step_));
  kernel_half_width_ = static_cast<double>(kernel_points_) * kernel_step_;

  // Fine transmission table; spacing well below the natural linewidth.
  const double margin = kernel_half_width_ + 0.25 * (x_max - x_min) + 1e9;
  const double lo = x_min - margin;
  const double hi = x_max + margin;
  std::size_t n = 2;
  while ((hi - lo) / static_cast<double>(n) > 1e6) n *= 2;
  FrequencyGrid grid{model.nu_line + 0.5 * (lo + hi), hi - lo, n};
  const OpticalResponse response = compute_response(model, cell, grid);
  table_ = transmission_spectrum(response);
  table_step_ = grid.spacing();
  table_start_ = grid.frequency(0) - model.nu_line;
}

double TransmissionScanModel::transmission(double offset) const {
  const double pos = (offset - table_start_) / table_step_;
  if (pos <= 0.0) return table_.front();
  if (pos >= static_cast<double>(table_.size() - 1)) return table_.back();
  const auto i = static_cast<std::size_t>(pos);
  const double f = pos - static_cast<double>(i);
  return table_[i] + f * (table_[i + 1] - table_[i]);
}

namespace {

// Interpolated transmission with its derivative in the offset argument.
template <class T>
T transmission_t(const TransmissionScanModel& m, const T& offset) {
  const auto& tab = m.table();
  const double pos = (value_of(offset) - m.table_start()) / m.table_step();
  if (pos <= 0.0) return T(tab.front());
  if (pos >= static_cast<double>(tab.size() - 1)) return T(tab.back());
  const auto i = static_cast<std::size_t>(pos);
  const double f = pos - static_cast<double>(i);
  const double slope = (tab[i + 1] - tab[i]) / m.table_step();
  if constexpr (std::is_same_v<T, double>) {
    return tab[i] + f * (tab[i + 1] - tab[i]);
  } else {
    return chain(offset, tab[i] + f * (tab[i + 1] - tab[i]), slope);
  }
}

template <class T>
void transmission_scan_eval(const TransmissionScanModel& tm, const std::vector<double>& xs, const T& gauss_fwhm,
                            double lorentz_fwhm, const T& amplitude, const T& slope, const T& offset,
                            const T& frequency_offset, double x_ref, std::vector<T>& out) {
  const double g = value_of(gauss_fwhm);
  if (g == 0.0 && lorentz_fwhm == 0.0) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out[i] = amplitude * transmission_t(tm, xs[i] + frequency_offset) + offset + slope * (xs[i] - x_ref);
    }
    return;
  }
  const std::size_t nk = 2 * tm.kernel_points() + 1;
  std::vector<T> w(nk);
  T total(0.0);
  for (std::size_t k = 0; k < nk; ++k) {
    const double u = (static_cast<double>(k) - static_cast<double>(tm.kernel_points())) * tm.kernel_spacing();
    if (g == 0.0) {
      const double hw = 0.5 * lorentz_fwhm;
      w[k] = T(hw / (u * u + hw * hw));
    } else {
      const T s2 = gauss_fwhm / constants::gaussian_fwhm_per_sigma * kSqrt2;
      w[k] = re_w(T(u) / s2, T(0.5 * lorentz_fwhm) / s2);
    }
    total += w[k];
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    T acc(0.0);
    for (std::size_t k = 0; k < nk; ++k) {
      const double u = (static_cast<double>(k) - static_cast<double>(tm.kernel_points())) * tm.kernel_spacing();
      acc += w[k] * transmission_t(tm, xs[i] + u + frequency_offset);
    }
    out[i] = amplitude * acc / total + offset + slope * (xs[i] - x_ref);
  }
}

}  // namespace

double TransmissionScanModel::evaluate(double x, double gauss_fwhm, double lorentz_fwhm, double amplitude,
                                       double slope, double offset, double frequency_offset, double x_ref) const {
  if (gauss_fwhm < 0.0 || lorentz_fwhm < 0.0) throw InvalidArgument("transmission scan: negative width");
  std::vector<double> out(1);
  transmission_scan_eval(*this, {x}, gauss_fwhm, lorentz_fwhm, amplitude, slope, offset, frequency_offset, x_ref,
                         out);
  return out[0];
}

namespace {

struct LifetimeModel {
  std::vector<double> t;
  double sigma = 0.0;
  template <class P, class Out>
  void operator()(const P& p, Out& out) const {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = p[1] * exp_gauss_t(t[i] - p[3], p[0], sigma) + p[2];
  }
};

struct VoigtScanModel {
  std::vector<double> x;
  double lorentz_fwhm = 0.0;
  double x_ref = 0.0;
  template <class P, class Out>
  void operator()(const P& p, Out& out) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = p[2] * voigt_peak_normalized(x[i] - p[1], p[0], lorentz_fwhm) + p[4] + p[3] * (x[i] - x_ref);
    }
  }
};

struct G2Model {
  std::vector<double> tau;
  double sigma = 0.0;
  template <class P, class Out>
  void operator()(const P& p, Out& out) const {
    using T = std::decay_t<decltype(p[0])>;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      const T k = exp_gauss_t(T(tau[i]), p[1], sigma) + exp_gauss_t(T(-tau[i]), p[1], sigma);
      out[i] = p[2] * (1.0 - (1.0 - p[0]) * k);
    }
  }
};

struct ScanModel {
  std::shared_ptr<const TransmissionScanModel> tm;
  std::vector<double> x;
  double lorentz_fwhm = 0.0;
  double x_ref = 0.0;
  template <class P, class Out>
  void operator()(const P& p, Out& out) const {
    transmission_scan_eval(*tm, x, p[0], lorentz_fwhm, p[1], p[2], p[3], p[4], x_ref, out);
  }
};

double mid_range(const Histogram1D& h) { return 0.5 * (h.centers.front() + h.centers.back()); }

ScanModel scan_model(const Histogram1D& data, const AtomModel& model, const VaporCell& cell, double lorentz_fwhm) {
  return {std::make_shared<const TransmissionScanModel>(model, cell, data.centers.front(), data.centers.back(),
                                                         data.spacing(), range_of(data)),
          data.centers, lorentz_fwhm, mid_range(data)};
}

}  // namespace

ResidualFn lifetime_residuals(const Histogram1D& data, double irf_fwhm, Weighting weighting) {
  data.validate();
  return make_residuals<4>(data, LifetimeModel{data.centers, sigma_of(irf_fwhm)}, weighting);
}

ResidualFn voigt_scan_residuals(const Histogram1D& data, double lorentz_fwhm, Weighting weighting) {
  data.validate();
  return make_residuals<5>(data, VoigtScanModel{data.centers, lorentz_fwhm, mid_range(data)}, weighting);
}

ResidualFn g2_residuals(const Histogram1D& data, double irf_fwhm, Weighting weighting) {
  data.validate();
  return make_residuals<3>(data, G2Model{data.centers, sigma_of(irf_fwhm)}, weighting);
}

ResidualFn transmission_scan_residuals(const Histogram1D& data, const AtomModel& model, const VaporCell& cell,
                                       double lorentz_fwhm, Weighting weighting) {
  data.validate();
  return make_residuals<5>(data, scan_model(data, model, cell, lorentz_fwhm), weighting);
}

// ---- fits ----

FitResult fit_lifetime(const Histogram1D& data, double irf_fwhm, const FitOptions& options) {
  data.validate();
  if (!(irf_fwhm >= 0.0)) throw InvalidArgument("fit_lifetime: IRF FWHM must be non-negative");
  const double sigma = sigma_of(irf_fwhm);
  const auto& t = data.centers;
  const auto& y = data.values;
  const std::size_t n = data.size();

  const std::size_t early = std::max<std::size_t>(1, n / 10);
  double background = 0.0;
  for (std::size_t i = 0; i < early; ++i) background += y[i];
  background /= static_cast<double>(early);
  const std::size_t ip = argmax(y);
  const double peak = y[ip] - background;
  if (!(peak > 0.0)) throw InvalidArgument("fit_lifetime: data show no decay above the background");
  std::size_t ie = ip;
  while (ie + 1 < n && y[ie] - background > peak / std::exp(1.0)) ++ie;
  double t1 = std::max(t[ie] - t[ip], 2.0 * data.spacing());
  if (ie + 1 >= n) t1 = 0.2 * (t.back() - t[ip]);
  const double t0 = t[ip] - std::min(sigma, 0.5 * t1);
  const double amplitude = peak / std::max(exp_gauss(t[ip] - t0, t1, sigma), 1e-3);

  const LifetimeModel model{t, sigma};
  const double span = t.back() - t.front();
  FitResult r = run_fit<4>("lifetime", data, model, {t1, amplitude, background, t0},
                           {1e-3 * data.spacing(), 0.0, -kInf, t.front() - span},
                           {10.0 * span, kInf, kInf, t.back()},
                           {{{"t1", "s"}, {"amplitude", ""}, {"background", ""}, {"t0", "s"}}}, options);
  r.derived.emplace_back("homogeneous_fwhm_hz", 1.0 / (2.0 * constants::pi * r.value("t1")));
  return r;
}

FitResult fit_voigt_scan(const Histogram1D& data, double lorentz_fwhm, const FitOptions& options) {
  data.validate();
  if (!(lorentz_fwhm > 0.0)) throw InvalidArgument("fit_voigt_scan: fixed Lorentzian FWHM must be positive");
  const auto& x = data.centers;
  const std::size_t n = data.size();
  const double x_ref = mid_range(data);

  double slope = 0.0;
  double offset = 0.0;
  linear_guess(data, slope, offset);
  const std::size_t ip = argmax(data.values);
  const double amplitude = data.values[ip] - (offset + slope * (x[ip] - x_ref));
  std::vector<double> above(n);
  for (std::size_t i = 0; i < n; ++i) above[i] = data.values[i] - (offset + slope * (x[i] - x_ref));
  double width = 0.1 * range_of(data);
  {
    std::size_t l = ip;
    std::size_t r = ip;
    while (l > 0 && above[l] > 0.5 * amplitude) --l;
    while (r + 1 < n && above[r] > 0.5 * amplitude) ++r;
    if (r > l) width = x[r] - x[l];
  }
  const double gauss = std::max(width - 0.5 * lorentz_fwhm, 0.5 * width);

  const VoigtScanModel model{x, lorentz_fwhm, x_ref};
  const double gmin = 1e-4 * lorentz_fwhm;
  FitResult r = run_fit<5>("voigt_scan", data, model, {gauss, x[ip], amplitude, slope, offset},
                           {gmin, x.front(), -kInf, -kInf, -kInf}, {10.0 * range_of(data), x.back(), kInf, kInf, kInf},
                           {{{"gauss_fwhm", "Hz"}, {"center", "Hz"}, {"amplitude", ""}, {"slope", "1/Hz"},
                             {"offset", ""}}},
                           options);
  r.derived.emplace_back("lorentz_fwhm", lorentz_fwhm);
  r.derived.emplace_back("voigt_fwhm", voigt_fwhm(lorentz_fwhm, r.value("gauss_fwhm")));
  r.derived.emplace_back("x_ref", x_ref);
  if (r.value("gauss_fwhm") < 0.05 * lorentz_fwhm) r.flags.emplace_back("gauss_fwhm_at_boundary");
  return r;
}

FitResult fit_g2(const Histogram1D& data, double irf_fwhm, const FitOptions& options) {
  data.validate();
  if (!(irf_fwhm >= 0.0)) throw InvalidArgument("fit_g2: IRF FWHM must be non-negative");
  const double plateau = plateau_level(data);
  if (!(std::abs(plateau - 1.0) <= 0.25)) {
    throw InvalidArgument("fit_g2: long-delay plateau is " + std::to_string(plateau) +
                          "; normalize the histogram to its plateau first");
  }
  const double sigma = sigma_of(irf_fwhm);
  const auto& tau = data.centers;
  const auto& y = data.values;
  const std::size_t n = data.size();

  const std::size_t imin = static_cast<std::size_t>(std::min_element(y.begin(), y.end()) - y.begin());
  const double depth = plateau - y[imin];
  double dip = 2.0 * data.spacing();
  if (depth > 0.0) {
    std::size_t r = imin;
    while (r + 1 < n && plateau - y[r] > depth / std::exp(1.0)) ++r;
    dip = std::max(tau[r] - tau[imin], dip);
  }
  const double g0 = std::clamp(1.0 - depth / plateau, 0.0, 1.0);

  const G2Model model{tau, sigma};
  FitResult r = run_fit<3>("g2", data, model, {g0, dip, plateau}, {0.0, 1e-3 * data.spacing(), 0.0},
                           {2.0, 10.0 * range_of(data), kInf},
                           {{{"g0_deconv", ""}, {"dip_time", "s"}, {"amplitude", ""}}}, options);
  r.derived.emplace_back("g0_measured", g2_measured(r.value("g0_deconv"), r.value("dip_time"), irf_fwhm));
  return r;
}

FitResult fit_transmission_scan(const Histogram1D& data, const AtomModel& model, const VaporCell& cell,
                                double lorentz_fwhm, const FitOptions& options) {
  data.validate();
  if (!(lorentz_fwhm > 0.0)) throw InvalidArgument("fit_transmission_scan: Lorentzian FWHM must be positive");
  const auto& x = data.centers;
  const std::size_t n = data.size();
  const double range = range_of(data);
  const double x_ref = mid_range(data);
  const double g_max = range / 2.5;
  const ScanModel fn = scan_model(data, model, cell, lorentz_fwhm);

  double slope = 0.0;
  double offset = 0.0;
  linear_guess(data, slope, offset);
  const double amplitude = *std::max_element(data.values.begin(), data.values.end());
  // Width of the deepest dip at half depth, minus the width of the bare cell
  // absorption feature there.
  const std::size_t imin = static_cast<std::size_t>(std::min_element(data.values.begin(), data.values.end()) -
                                                    data.values.begin());
  const double half = 0.5 * (amplitude + data.values[imin]);
  std::size_t l = imin;
  std::size_t r = imin;
  while (l > 0 && data.values[l] < half) --l;
  while (r + 1 < n && data.values[r] < half) ++r;
  const double dip_width = x[r] - x[l];
  const double gauss = std::clamp(std::sqrt(std::max(dip_width * dip_width - 1.5e9 * 1.5e9, 0.0)), 0.2e9, 0.5 * g_max);

  FitResult res = run_fit<5>("transmission_scan", data, fn, {gauss, amplitude, slope, 0.0, 0.0},
                             {1e-4 * lorentz_fwhm, 0.0, -kInf, -kInf, -0.25 * range},
                             {g_max, kInf, kInf, kInf, 0.25 * range},
                             {{{"gauss_fwhm", "Hz"}, {"amplitude", ""}, {"slope", "1/Hz"}, {"offset", ""},
                               {"frequency_offset", "Hz"}}},
                             options);
  res.derived.emplace_back("lorentz_fwhm", lorentz_fwhm);
  res.derived.emplace_back("voigt_fwhm", voigt_fwhm(lorentz_fwhm, res.value("gauss_fwhm")));
  res.derived.emplace_back("x_ref", x_ref);
  return res;
}

}  // namespace csdelay::fit
