#include "csdelay/vapor.hpp"

#include <cmath>
#include <string>

#include "csdelay/constants.hpp"
#include "csdelay/error.hpp"

namespace csdelay {

void VaporCell::validate() const {
  if (!(length > 0.0) || !std::isfinite(length)) throw InvalidArgument("cell length must be positive");
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("cell temperature must be positive");
  }
  if (!(population_factor >= 0.0) || !std::isfinite(population_factor)) {
    throw InvalidArgument("population factor must be non-negative");
  }
  if (density_override && (!(*density_override >= 0.0) || !std::isfinite(*density_override))) {
    throw InvalidArgument("density override must be non-negative");
  }
}

double vapor_pressure(double temperature) {
  if (!(temperature >= vapor_model_t_min && temperature <= vapor_model_t_max)) {
    throw RangeError("temperature " + std::to_string(temperature) +
                     " K outside the vapor-pressure validity window [250, 500] K");
  }
  const double log10_torr = 11.0531 - 1.35 * std::log10(temperature) - 4041.0 / temperature;
  return std::pow(10.0, log10_torr) * constants::torr;
}

double number_density(double temperature) {
  return vapor_pressure(temperature) / (constants::boltzmann * temperature);
}

double cell_density(const VaporCell& cell) {
  cell.validate();
  if (cell.density_override) return *cell.density_override;
  return number_density(cell.temperature);
}

double temperature_for_density(double density, double tolerance) {
  double lo = vapor_model_t_min;
  double hi = vapor_model_t_max;
  if (!(density >= number_density(lo) && density <= number_density(hi))) {
    throw RangeError("density " + std::to_string(density) +
                     " m^-3 not reachable inside the vapor-pressure validity window");
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (number_density(mid) < density) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace csdelay
