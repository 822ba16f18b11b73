#pragma once

#include <complex>
#include <span>

namespace tftomo {

using cplx = std::complex<double>;

/// Unnormalized in-place DFT, X_j = sum_k x_k exp(-2 pi i jk/n) (forward) or
/// exp(+2 pi i jk/n) (inverse). Plans are cached per (n, direction) and shared
/// between threads.
void fft_inplace(std::span<cplx> data);
void ifft_inplace(std::span<cplx> data);

}  // namespace tftomo
