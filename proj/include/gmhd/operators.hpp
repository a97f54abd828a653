#pragma once

#include "gmhd/multiplier.hpp"
#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Apply the dissipation operator L: scale every coefficient by the symbol
/// -|k|^gamma / g(|k|).
SpectralField apply_multiplier(const MultiplierSpec& spec,
                               const SpectralField& f);

/// Apply the semigroup e^{tL}: scale by exp(t * symbol(k)). t = 0 is the
/// identity; every coefficient magnitude is non-increasing in t.
/// Throws std::invalid_argument for t < 0.
SpectralField apply_semigroup(const MultiplierSpec& spec, double t,
                              const SpectralField& f);

/// Apply (1 - alpha^2 L)^{-1}: scale by 1 / (1 + alpha^2 |k|^gamma / g(|k|)).
/// All factors lie in (0, 1].
SpectralField apply_helmholtz_inverse(const MultiplierSpec& spec,
                                      const SpectralField& f,
                                      double alpha = 1.0);

/// Mode-wise projection onto divergence-free fields:
/// c(k) <- (I - k k^T / |k|^2) c(k) for k != 0; the mean mode is unchanged.
/// Idempotent. Requires a full vector field (components == dim).
SpectralField leray_project(const SpectralField& f);

}  // namespace gmhd
