#pragma once

#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Bessel-potential Sobolev norm ||f||_{r,p}: the coefficients are weighted
/// by (1 + |k|^2)^{r/2}, the field is synthesized on the physical grid, and
/// the L^p norm is taken under the normalized measure (vector values enter
/// through the pointwise Euclidean magnitude). p = 2 agrees with the exact
/// Plancherel value; for p != 2 the grid quadrature carries an O(1/N)
/// discretization error on smooth fields. Negative r is admitted (it arises
/// in the inverse operator estimate).
/// Throws std::invalid_argument for p <= 1 or non-finite r, p.
double sobolev_norm(const SpectralField& f, double r, double p);

/// L^p quadrature norm (r = 0 path).
double lp_norm(const SpectralField& f, double p);

/// Exact Plancherel Sobolev norm for p = 2:
/// sqrt(sum (1+|k|^2)^r |c(k)|^2). Used as the p = 2 cross-check.
double plancherel_norm(const SpectralField& f, double r = 0.0);

}  // namespace gmhd
