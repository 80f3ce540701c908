#include "csdelay/fit/levmar.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "csdelay/error.hpp"

namespace csdelay::fit {

namespace {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

void project(std::vector<double>& p, const std::vector<double>& lo, const std::vector<double>& hi) {
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::clamp(p[j], lo[j], hi[j]);
}

double sum_squares(const std::vector<double>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return s;
}

}  // namespace

LmResult levenberg_marquardt(const ResidualFn& fn, std::size_t m, std::vector<double> p0,
                             const std::vector<double>& lower, const std::vector<double>& upper,
                             const LmOptions& options) {
  const std::size_t n = p0.size();
  if (lower.size() != n || upper.size() != n) throw InvalidArgument("levmar: bounds must match parameter count");
  if (m < n) throw InvalidArgument("levmar: fewer residuals than parameters");
  for (std::size_t j = 0; j < n; ++j) {
    if (!(lower[j] <= upper[j])) throw InvalidArgument("levmar: empty parameter interval");
  }
  project(p0, lower, upper);

  std::vector<double> r(m);
  std::vector<double> jac(m * n);
  std::vector<double> r_trial(m);

  LmResult res;
  res.params = p0;
  fn(res.params, r, &jac);
  double cost = sum_squares(r);
  if (!std::isfinite(cost)) throw InvalidArgument("levmar: model is not finite at the initial guess");
  res.initial_cost = cost;
  double lambda = options.initial_lambda;
  Vector diag = Vector::Zero(static_cast<Eigen::Index>(n));

  for (res.iterations = 0; res.iterations < options.max_iterations; ++res.iterations) {
    const Eigen::Map<const Matrix> J(jac.data(), static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    const Eigen::Map<const Vector> rv(r.data(), static_cast<Eigen::Index>(m));
    const Matrix jtj = J.transpose() * J;
    const Vector g = J.transpose() * rv;
    // More's scaling: the running maximum of each column norm. A floor tied
    // to the largest column would freeze parameters whose units make their
    // columns tiny (a slope in 1/Hz next to widths in Hz).
    for (Eigen::Index j = 0; j < diag.size(); ++j) diag[j] = std::max(diag[j], jtj(j, j));

    bool accepted = false;
    bool small_step = false;
    while (lambda < 1e16) {
      Matrix a = jtj;
      for (Eigen::Index j = 0; j < diag.size(); ++j) a(j, j) += lambda * (diag[j] > 0.0 ? diag[j] : 1.0);
      const Vector step = a.ldlt().solve(-g);
      std::vector<double> trial = res.params;
      for (std::size_t j = 0; j < n; ++j) trial[j] += step[static_cast<Eigen::Index>(j)];
      project(trial, lower, upper);
      small_step = true;
      for (std::size_t j = 0; j < n; ++j) {
        const double dp = std::abs(trial[j] - res.params[j]);
        if (dp > options.step_tolerance * (std::abs(res.params[j]) + options.step_tolerance)) small_step = false;
      }
      fn(trial, r_trial, nullptr);
      const double trial_cost = sum_squares(r_trial);
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        res.params = std::move(trial);
        cost = trial_cost;
        lambda = std::max(lambda * 0.1, 1e-12);
        accepted = true;
        break;
      }
      if (small_step) break;
      lambda *= 10.0;
    }
    if (small_step) {
      res.converged = true;
      res.message = "relative step below tolerance";
      break;
    }
    if (!accepted) {
      // No direction lowers the cost any more: a stationary point to
      // working precision.
      res.converged = true;
      res.message = "cost cannot be reduced further";
      break;
    }
    fn(res.params, r, &jac);
  }
  if (!res.converged) res.message = "maximum iterations reached";

  fn(res.params, r, &jac);
  res.cost = sum_squares(r);
  const Eigen::Map<const Matrix> J(jac.data(), static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  const Matrix jtj = J.transpose() * J;
  const double s2 = m > n ? res.cost / static_cast<double>(m - n) : 0.0;
  // Equilibrate before the pseudo-inverse so that parameters of very
  // different magnitude (ns lifetimes next to count amplitudes) survive the
  // rank threshold.
  Vector scale(static_cast<Eigen::Index>(n));
  std::vector<bool> free_direction(n, true);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    free_direction[j] = !(jtj(jj, jj) > 0.0);
    scale[jj] = free_direction[j] ? 0.0 : 1.0 / std::sqrt(jtj(jj, jj));
  }
  const Matrix scaled = scale.asDiagonal() * jtj * scale.asDiagonal();
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(scaled);
  cod.setThreshold(1e-12);
  Matrix cov = scale.asDiagonal() * Matrix(cod.pseudoInverse()) * scale.asDiagonal() * s2;
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    if (free_direction[j] || !(cov(jj, jj) >= 0.0)) cov(jj, jj) = std::numeric_limits<double>::infinity();
  }
  res.covariance.assign(cov.data(), cov.data() + n * n);
  return res;
}

}  // namespace csdelay::fit
