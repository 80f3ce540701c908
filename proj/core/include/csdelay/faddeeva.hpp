#pragma once

#include <complex>

namespace csdelay {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Weideman's rational expansion (SIAM J. Numer. Anal. 31, 1497 (1994)) with
/// 36 terms: one formula over the whole upper half plane, relative error
/// below 1e-12 in practice. The lower half plane is reached through
/// w(z) = 2 exp(-z^2) - w(-z), which overflows for large |Im z|.
/// Throws InvalidArgument for non-finite input.
std::complex<double> faddeeva(std::complex<double> z);

/// dw/dz = -2 z w(z) + 2i/sqrt(pi).
std::complex<double> faddeeva_derivative(std::complex<double> z);

/// Scaled complementary error function exp(x^2) erfc(x) = w(ix).
double erfcx(double x);

/// Area-normalized Voigt profile at offset x: Gaussian of standard deviation
/// `sigma` convolved with a Lorentzian of half width `gamma_hwhm`.
/// Degenerate widths reduce to the pure Lorentzian or Gaussian.
double voigt_profile(double x, double sigma, double gamma_hwhm);

/// Olivero & Longbothum (1977) estimate of the Voigt FWHM,
/// 0.5346 fL + sqrt(0.2166 fL^2 + fG^2), accurate to ~0.02 %.
double voigt_fwhm(double lorentz_fwhm, double gauss_fwhm);

}  // namespace csdelay
