#pragma once

#include <numbers>

// SI values (CODATA 2018, exact where the SI defines them).
namespace csdelay::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light = 299'792'458.0;       // m/s
inline constexpr double planck = 6.626'070'15e-34;            // J s
inline constexpr double hbar = planck / (2.0 * pi);           // J s
inline constexpr double boltzmann = 1.380'649e-23;            // J/K
inline constexpr double vacuum_permittivity = 8.854'187'8128e-12;  // F/m
inline constexpr double atomic_mass_unit = 1.660'539'066'60e-27;   // kg
inline constexpr double torr = 101'325.0 / 760.0;             // Pa
inline constexpr double zero_celsius = 273.15;                // K

// FWHM = sigma * 2 sqrt(2 ln 2) for a Gaussian.
inline constexpr double gaussian_fwhm_per_sigma = 2.354'820'045'030'949'4;

}  // namespace csdelay::constants
