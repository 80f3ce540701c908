#pragma once

#include "csdelay/grid.hpp"
#include "csdelay/wave.hpp"

namespace csdelay {

// Transform pair used throughout (physics sign convention):
//   E(nu) = integral e(t) exp(+2 pi i nu t) dt
//   e(t)  = integral E(nu) exp(-2 pi i nu t) dnu
// A spectral factor exp(+2 pi i nu tau) therefore delays a packet by tau.
// Both integrals are evaluated as Riemann sums on the discrete grids, so the
// pair is an exact inverse up to rounding.

/// Spectrum of `packet` on the dual frequency grid centered at its frame.
ComplexSpectrum to_spectrum(const WavePacket& packet);

/// Field on `time` whose spectrum is `spectrum`. Throws GridMismatch unless the
/// grids are Fourier duals.
WavePacket to_time(const ComplexSpectrum& spectrum, const TimeGrid& time);

}  // namespace csdelay
