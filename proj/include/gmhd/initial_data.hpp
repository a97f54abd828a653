#pragma once

#include <array>
#include <cstdint>

#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Real single-mode field amplitude * e * cos(k.x), where e is a
/// deterministic unit vector orthogonal to k (hence divergence-free).
/// k must be nonzero and representable on the grid.
SpectralField single_mode_field(const Grid& grid, const std::array<int, 3>& k,
                                double amplitude);

/// Classical cellular flow: in 2D (sin x cos y, -cos x sin y), in 3D the
/// standard z-invariant extension with zero third component. Divergence-free.
SpectralField taylor_green_like_field(const Grid& grid, double amplitude);

/// Random real field with coefficients supported on |k_j| <= band,
/// Hermitian-symmetrized, optionally Leray-projected, scaled to the given
/// L2 norm. Fully determined by the seed.
SpectralField random_band_limited_field(const Grid& grid, int components,
                                        double amplitude, int band,
                                        std::uint64_t seed,
                                        bool solenoidal = true);

}  // namespace gmhd
