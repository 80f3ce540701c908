#include "csdelay/grid.hpp"

#include <algorithm>
#include <cmath>

#include "csdelay/error.hpp"

namespace csdelay {

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); }

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void FrequencyGrid::validate() const {
  if (n_points < 2 || !is_power_of_two(n_points)) {
    throw InvalidArgument("frequency grid: n_points must be a power of two >= 2");
  }
  if (!(span > 0.0) || !std::isfinite(span)) throw InvalidArgument("frequency grid: span must be positive");
  if (!std::isfinite(center)) throw InvalidArgument("frequency grid: center must be finite");
}

std::vector<double> FrequencyGrid::offsets() const {
  std::vector<double> out(n_points);
  for (std::size_t j = 0; j < n_points; ++j) out[j] = offset(j);
  return out;
}

std::size_t FrequencyGrid::nearest(double offset_hz) const {
  const double idx = std::round(offset_hz / spacing() + 0.5 * static_cast<double>(n_points));
  return static_cast<std::size_t>(std::clamp(idx, 0.0, static_cast<double>(n_points - 1)));
}

void TimeGrid::validate() const {
  if (n_points < 2 || !is_power_of_two(n_points)) {
    throw InvalidArgument("time grid: n_points must be a power of two >= 2");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("time grid: step must be positive");
  if (!std::isfinite(start)) throw InvalidArgument("time grid: start must be finite");
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> out(n_points);
  for (std::size_t m = 0; m < n_points; ++m) out[m] = time(m);
  return out;
}

TimeGrid default_time_grid() {
  TimeGrid g;
  g.n_points = std::size_t{1} << 16;
  g.step = 8e-12;
  g.start = -static_cast<double>(g.n_points / 16) * g.step;
  return g;
}

FrequencyGrid dual_grid(const TimeGrid& time, double center) {
  time.validate();
  FrequencyGrid f;
  f.center = center;
  f.span = 1.0 / time.step;
  f.n_points = time.n_points;
  return f;
}

bool fourier_compatible(const TimeGrid& time, const FrequencyGrid& freq) {
  return time.n_points == freq.n_points && close(time.step * freq.span, 1.0);
}

void ComplexSpectrum::validate() const {
  grid.validate();
  if (values.size() != grid.n_points) throw GridMismatch("spectrum length does not match its grid");
}

bool same_grid(const FrequencyGrid& a, const FrequencyGrid& b) {
  return a.n_points == b.n_points && close(a.span, b.span) &&
         std::abs(a.center - b.center) <= 1e-6 * a.spacing();
}

bool same_grid(const TimeGrid& a, const TimeGrid& b) {
  return a.n_points == b.n_points && close(a.step, b.step) && std::abs(a.start - b.start) <= 1e-6 * a.step;
}

}  // namespace csdelay
