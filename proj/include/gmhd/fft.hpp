#pragma once

#include <complex>

#include "gmhd/grid.hpp"

namespace gmhd::fft {

/// In-place physical -> spectral transform (includes the 1/N^dim scaling, so
/// coefficients are the amplitudes in f(x) = sum_k c(k) exp(i k.x)).
void forward(const Grid& grid, std::complex<double>* data);

/// In-place spectral -> physical transform (unscaled synthesis).
void inverse(const Grid& grid, std::complex<double>* data);

}  // namespace gmhd::fft
