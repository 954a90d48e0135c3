#pragma once

#include <complex>
#include <span>
#include <vector>

namespace uw {

using cplx = std::complex<double>;

// In-place radix-2 FFT. Length must be a power of two.
// sign = -1: forward kernel e^{-2pi i jk/n}, sign = +1: inverse kernel
// (unscaled; callers apply their own normalization).
void fft_inplace(std::span<cplx> data, int sign);

bool is_pow2(std::size_t n);

// Row-column 2D transform of an n0 x n1 array stored row-major.
void fft2_inplace(std::span<cplx> data, std::size_t n0, std::size_t n1, int sign);

}  // namespace uw
