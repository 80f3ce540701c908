#pragma once

#include <filesystem>
#include <optional>
#include <vector>

namespace csdelay::fit {

/// Binned data: strictly increasing centers, values, optional 1-sigma errors.
struct Histogram1D {
  std::vector<double> centers;
  std::vector<double> values;
  std::optional<std::vector<double>> sigma;

  void validate() const;
  std::size_t size() const { return centers.size(); }
  /// Mean bin spacing.
  double spacing() const;
};

/// Two or three columns (x, y[, sigma]) with an optional header row.
Histogram1D read_histogram_csv(const std::filesystem::path& path);

/// Mean of the `fraction` of bins farthest from the center of the x range.
double plateau_level(const Histogram1D& h, double fraction = 0.2);

/// Divides values (and sigma) by plateau_level. Throws InvalidArgument when the
/// plateau is not positive.
Histogram1D normalize_to_plateau(const Histogram1D& h, double fraction = 0.2);

}  // namespace csdelay::fit
