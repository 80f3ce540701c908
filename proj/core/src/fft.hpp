#pragma once

#include <complex>
#include <vector>

namespace csdelay::detail {

enum class FftSign { forward = -1, backward = +1 };

// In-place unnormalized DFT: x_j <- sum_m x_m exp(sign * 2 pi i j m / n).
// Plans are cached per (n, sign); safe to call from several threads.
void fft_inplace(std::vector<std::complex<double>>& data, FftSign sign);

}  // namespace csdelay::detail
