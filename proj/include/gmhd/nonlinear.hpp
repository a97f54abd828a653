#pragma once

#include "gmhd/multiplier.hpp"
#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Alias control for pointwise products. two_thirds zeroes every mode with
/// any |k_j| > N/3 before and after a product, which makes quadratic
/// products of band-limited fields agree with exact mode-space convolution
/// on the retained band.
enum class DealiasMode { two_thirds, none };

struct DealiasRule {
  DealiasMode mode = DealiasMode::two_thirds;
};

/// Zero the modes removed by the rule (no-op for DealiasMode::none).
void dealias(SpectralField& f, const DealiasRule& rule);

/// div(x (x) y), the divergence-form transport term: pointwise tensor
/// products on the physical grid, then the spectral divergence over the
/// first tensor index. Equals (x . grad) y when x is divergence-free.
/// Throws on grid mismatch.
SpectralField tensor_divergence(const SpectralField& x, const SpectralField& y,
                                const DealiasRule& rule);

/// W1(x,y) = P (1 - alpha^2 L3)^{-1} div(x (x) y). Divergence-free output.
SpectralField w1(const SpectralField& x, const SpectralField& y,
                 const MultiplierSpec& spec3, const DealiasRule& rule,
                 double alpha = 1.0);

/// W2(x,y) = P (1 - alpha^2 L3)^{-1} (sum_i y_i grad x_i), with the gradient
/// taken spectrally before the pointwise product.
SpectralField w2(const SpectralField& x, const SpectralField& y,
                 const MultiplierSpec& spec3, const DealiasRule& rule,
                 double alpha = 1.0);

/// W3(x,y) = P div(x (x) y). Not symmetric in (x, y).
SpectralField w3(const SpectralField& x, const SpectralField& y,
                 const DealiasRule& rule);

/// v = (1 - alpha^2 L3) u: scale modes by 1 + alpha^2 |k|^{gamma3}/g3(|k|).
SpectralField filtered_velocity(const SpectralField& u,
                                const MultiplierSpec& spec3, double alpha);

}  // namespace gmhd
