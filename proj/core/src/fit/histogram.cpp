#include "csdelay/fit/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "csdelay/csv.hpp"
#include "csdelay/error.hpp"

namespace csdelay::fit {

void Histogram1D::validate() const {
  if (centers.size() < 3) throw InvalidArgument("histogram needs at least three bins");
  if (values.size() != centers.size()) throw InvalidArgument("histogram: values and centers differ in length");
  for (std::size_t i = 1; i < centers.size(); ++i) {
    if (!(centers[i] > centers[i - 1])) throw InvalidArgument("histogram: centers must be strictly increasing");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("histogram: non-finite value");
  }
  if (sigma) {
    if (sigma->size() != centers.size()) throw InvalidArgument("histogram: sigma length mismatch");
    for (double s : *sigma) {
      if (!(s >= 0.0)) throw InvalidArgument("histogram: uncertainties must be non-negative");
    }
  }
}

double Histogram1D::spacing() const {
  return (centers.back() - centers.front()) / static_cast<double>(centers.size() - 1);
}

Histogram1D read_histogram_csv(const std::filesystem::path& path) {
  CsvData csv = read_csv(path);
  if (csv.columns.size() < 2 || csv.columns.size() > 3) {
    throw InvalidArgument(path.string() + ": expected two or three columns (x, y[, sigma])");
  }
  Histogram1D h{std::move(csv.columns[0]), std::move(csv.columns[1]), std::nullopt};
  if (csv.columns.size() == 3) h.sigma = std::move(csv.columns[2]);
  h.validate();
  return h;
}

double plateau_level(const Histogram1D& h, double fraction) {
  h.validate();
  const double mid = 0.5 * (h.centers.front() + h.centers.back());
  std::vector<std::size_t> idx(h.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(h.centers[a] - mid) > std::abs(h.centers[b] - mid);
  });
  const std::size_t count = std::max<std::size_t>(1, static_cast<std::size_t>(fraction * static_cast<double>(h.size())));
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += h.values[idx[i]];
  return sum / static_cast<double>(count);
}

Histogram1D normalize_to_plateau(const Histogram1D& h, double fraction) {
  const double level = plateau_level(h, fraction);
  if (!(level > 0.0)) throw InvalidArgument("histogram plateau is not positive; cannot normalize");
  Histogram1D out = h;
  for (auto& v : out.values) v /= level;
  if (out.sigma) {
    for (auto& s : *out.sigma) s /= level;
  }
  return out;
}

}  // namespace csdelay::fit
