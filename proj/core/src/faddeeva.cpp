#include "csdelay/faddeeva.hpp"

#include <array>
#include <cmath>

#include "csdelay/constants.hpp"
#include "csdelay/error.hpp"

namespace csdelay {

namespace {

constexpr int kTerms = 36;

struct Weideman {
  double l = 0.0;
  std::array<double, kTerms> a{};  // a[j-1] multiplies Z^(j-1)

  Weideman() {
    const int m = 2 * kTerms;
    l = std::sqrt(kTerms / std::sqrt(2.0));
    // Cosine transform of f(t) = exp(-t^2)(L^2 + t^2) sampled at t = L tan(theta/2),
    // theta = k pi / M for k = -M+1 .. M-1. f is even so the transform is real.
    std::array<double, 2 * kTerms> f{};
    for (int k = 0; k < m; ++k) {
      const double t = l * std::tan(0.5 * k * constants::pi / m);
      f[k] = std::exp(-t * t) * (l * l + t * t);
    }
    for (int j = 1; j <= kTerms; ++j) {
      double sum = f[0];
      for (int k = 1; k < m; ++k) sum += 2.0 * f[k] * std::cos(constants::pi * j * k / m);
      a[j - 1] = sum / (2.0 * m);
    }
  }
};

const Weideman& weideman() {
  static const Weideman w;
  return w;
}

std::complex<double> upper_half(std::complex<double> z) {
  const auto& w = weideman();
  const std::complex<double> iz(-z.imag(), z.real());
  const std::complex<double> lmiz = w.l - iz;
  const std::complex<double> big_z = (w.l + iz) / lmiz;
  std::complex<double> p = w.a[kTerms - 1];
  for (int j = kTerms - 2; j >= 0; --j) p = p * big_z + w.a[j];
  const std::complex<double> inv = 1.0 / lmiz;
  return 2.0 * p * inv * inv + inv / std::sqrt(constants::pi);
}

}  // namespace

std::complex<double> faddeeva(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidArgument("faddeeva: non-finite argument");
  }
  if (z.imag() >= 0.0) return upper_half(z);
  return 2.0 * std::exp(-z * z) - upper_half(-z);
}

std::complex<double> faddeeva_derivative(std::complex<double> z) {
  return -2.0 * z * faddeeva(z) + std::complex<double>(0.0, 2.0 / std::sqrt(constants::pi));
}

double erfcx(double x) {
  if (x < 0.0) return 2.0 * std::exp(x * x) - erfcx(-x);
  return upper_half({0.0, x}).real();
}

double voigt_profile(double x, double sigma, double gamma_hwhm) {
  if (sigma < 0.0 || gamma_hwhm < 0.0) throw InvalidArgument("voigt_profile: widths must be non-negative");
  if (sigma == 0.0) {
    if (gamma_hwhm == 0.0) throw InvalidArgument("voigt_profile: both widths are zero");
    return gamma_hwhm / (constants::pi * (x * x + gamma_hwhm * gamma_hwhm));
  }
  const double s2 = sigma * std::sqrt(2.0);
  const std::complex<double> z(x / s2, gamma_hwhm / s2);
  return faddeeva(z).real() / (sigma * std::sqrt(2.0 * constants::pi));
}

double voigt_fwhm(double lorentz_fwhm, double gauss_fwhm) {
  return 0.5346 * lorentz_fwhm +
         std::sqrt(0.2166 * lorentz_fwhm * lorentz_fwhm + gauss_fwhm * gauss_fwhm);
}

}  // namespace csdelay
