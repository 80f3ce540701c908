#pragma once

#include <functional>
#include <string>
#include <vector>

namespace csdelay::fit {

/// Fills residuals r (size m) and, when `jacobian` is non-null, the row-major
/// m x n matrix dr_i/dp_j.
using ResidualFn =
    std::function<void(const std::vector<double>& params, std::vector<double>& r, std::vector<double>* jacobian)>;

struct LmOptions {
  int max_iterations = 200;
  /// Converged when every |dp_j| <= step_tolerance * (|p_j| + step_tolerance).
  double step_tolerance = 1e-10;
  double initial_lambda = 1e-3;
};

struct LmResult {
  std::vector<double> params;
  /// (J^T J)^-1 s^2 with s^2 = cost / (m - n); +inf on the diagonal for
  /// parameters the data do not constrain.
  std::vector<double> covariance;  // row-major n x n
  double cost = 0.0;          // sum of squared residuals at params
  double initial_cost = 0.0;  // at the starting point
  int iterations = 0;
  bool converged = false;
  std::string message;
};

/// Levenberg-Marquardt with Marquardt's diagonal scaling. Box bounds are
/// enforced by projecting every trial point; steps that do not lower the
/// cost are rejected, so cost <= initial_cost always holds.
LmResult levenberg_marquardt(const ResidualFn& fn, std::size_t n_residuals, std::vector<double> p0,
                             const std::vector<double>& lower, const std::vector<double>& upper,
                             const LmOptions& options = {});

}  // namespace csdelay::fit
