#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gmhd/grid.hpp"
#include "gmhd/multiplier.hpp"
#include "gmhd/spectral_field.hpp"
#include "gmhd/theorem.hpp"

namespace gmhd::test {

using Complex = std::complex<double>;

inline double rel_l2_diff(const SpectralField& a, const SpectralField& b) {
  SpectralField diff = a;
  diff -= b;
  double scale = std::max(a.l2_norm(), b.l2_norm());
  return scale == 0.0 ? diff.l2_norm() : diff.l2_norm() / scale;
}

// ---------------------------------------------------------------------------
// Brute-force mode-space oracles. These never touch the FFT path: products
// are true convolutions over integer wave vectors, restricted to the band
// |k_j| <= floor(N/3), and the operator factors are scalar formulas.
// ---------------------------------------------------------------------------

inline bool in_band(const Grid& grid, const std::array<int, 3>& k, int band) {
  for (int d = 0; d < grid.dim(); ++d)
    if (std::abs(k[d]) > band) return false;
  return true;
}

/// True convolution of two coefficient arrays, restricted to the retained
/// band: c(k) = sum over k1 + k2 = k (no wrap-around) of f(k1) g(k2).
inline std::vector<Complex> convolve_truncated(
    const Grid& grid, const std::vector<Complex>& f,
    const std::vector<Complex>& g) {
  int band = grid.points_per_axis() / 3;
  std::vector<Complex> out(grid.modes(), Complex{0.0, 0.0});
  for (int i = 0; i < grid.modes(); ++i) {
    if (f[i] == Complex{0.0, 0.0}) continue;
    auto k1 = grid.wavevector(i);
    for (int j = 0; j < grid.modes(); ++j) {
      if (g[j] == Complex{0.0, 0.0}) continue;
      auto k2 = grid.wavevector(j);
      std::array<int, 3> k{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]};
      if (!in_band(grid, k, band)) continue;
      out[grid.index_of(k)] += f[i] * g[j];
    }
  }
  return out;
}

/// div(x (x) y) via the convolution oracle: out_j = i sum_i k_i (x_i * y_j).
inline SpectralField oracle_tensor_divergence(const SpectralField& x,
                                              const SpectralField& y) {
  const Grid& grid = x.grid();
  int dim = grid.dim();
  SpectralField out(grid, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      auto conv = convolve_truncated(grid, x.component(i), y.component(j));
      for (int flat = 0; flat < grid.modes(); ++flat) {
        double ki = grid.wavevector(flat)[i];
        out.coef(j, flat) += Complex{0.0, ki} * conv[flat];
      }
    }
  }
  return out;
}

/// sum_i y_i grad x_i via the oracle: out_j = sum_i (y_i * (i k_j x_i)).
inline SpectralField oracle_gradient_sum(const SpectralField& x,
                                         const SpectralField& y) {
  const Grid& grid = x.grid();
  int dim = grid.dim();
  SpectralField out(grid, dim);
  std::vector<Complex> grad(grid.modes());
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const auto& xi = x.component(i);
      for (int flat = 0; flat < grid.modes(); ++flat) {
        double kj = grid.wavevector(flat)[j];
        grad[flat] = Complex{0.0, kj} * xi[flat];
      }
      auto conv = convolve_truncated(grid, y.component(i), grad);
      for (int flat = 0; flat < grid.modes(); ++flat)
        out.coef(j, flat) += conv[flat];
    }
  }
  return out;
}

/// (x . grad) y via the oracle: out_j = sum_i (x_i * (i k_i y_j)).
inline SpectralField oracle_advection(const SpectralField& x,
                                      const SpectralField& y) {
  const Grid& grid = x.grid();
  int dim = grid.dim();
  SpectralField out(grid, dim);
  std::vector<Complex> grad(grid.modes());
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const auto& yj = y.component(j);
      for (int flat = 0; flat < grid.modes(); ++flat) {
        double ki = grid.wavevector(flat)[i];
        grad[flat] = Complex{0.0, ki} * yj[flat];
      }
      auto conv = convolve_truncated(grid, x.component(i), grad);
      for (int flat = 0; flat < grid.modes(); ++flat)
        out.coef(j, flat) += conv[flat];
    }
  }
  return out;
}

/// Mode-wise scalar factor of (1 - alpha^2 L3)^{-1}.
inline void oracle_helmholtz_inverse(SpectralField& f,
                                     const MultiplierSpec& spec3,
                                     double alpha = 1.0) {
  const Grid& grid = f.grid();
  for (int c = 0; c < f.components(); ++c)
    for (int flat = 0; flat < grid.modes(); ++flat)
      f.coef(c, flat) /=
          1.0 - alpha * alpha * symbol_eval(spec3, grid.k_norm(flat));
}

/// Mode-wise projection matrix I - k k^T / |k|^2.
inline void oracle_leray(SpectralField& f) {
  const Grid& grid = f.grid();
  int dim = grid.dim();
  for (int flat = 0; flat < grid.modes(); ++flat) {
    double k_sq = grid.k_norm_sq(flat);
    if (k_sq == 0.0) continue;
    auto k = grid.wavevector(flat);
    Complex dot{0.0, 0.0};
    for (int c = 0; c < dim; ++c) dot += double(k[c]) * f.coef(c, flat);
    dot /= k_sq;
    for (int c = 0; c < dim; ++c) f.coef(c, flat) -= double(k[c]) * dot;
  }
}

inline SpectralField oracle_w1(const SpectralField& x, const SpectralField& y,
                               const MultiplierSpec& spec3,
                               double alpha = 1.0) {
  SpectralField out = oracle_tensor_divergence(x, y);
  oracle_helmholtz_inverse(out, spec3, alpha);
  oracle_leray(out);
  return out;
}

inline SpectralField oracle_w2(const SpectralField& x, const SpectralField& y,
                               const MultiplierSpec& spec3,
                               double alpha = 1.0) {
  SpectralField out = oracle_gradient_sum(x, y);
  oracle_helmholtz_inverse(out, spec3, alpha);
  oracle_leray(out);
  return out;
}

inline SpectralField oracle_w3(const SpectralField& x,
                               const SpectralField& y) {
  SpectralField out = oracle_tensor_divergence(x, y);
  oracle_leray(out);
  return out;
}

/// Hermitian pair (mode at k and conjugate at -k) with a given complex
/// coefficient vector; the building block of the single-mode oracle tests.
inline SpectralField hermitian_mode(const Grid& grid,
                                    const std::array<int, 3>& k,
                                    const std::vector<Complex>& coeff) {
  SpectralField f(grid);
  std::array<int, 3> neg{0, 0, 0};
  for (int d = 0; d < grid.dim(); ++d) neg[d] = -k[d];
  for (int c = 0; c < grid.dim(); ++c) {
    f.set_mode(c, k, coeff[c]);
    f.set_mode(c, neg, std::conj(coeff[c]));
  }
  return f;
}

/// Rejection-sample a parameter instance satisfying every structural
/// hypothesis, with both gammas strictly above their minima.
inline TheoremInstance sample_structural_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (;;) {
    TheoremInstance inst;
    inst.n = 3 + int(unif(rng) * 3.0);  // 3, 4, or 5
    inst.epsilon = 1e-9;
    double n = inst.n;
    inst.p0 = n + 4.0 * unif(rng);
    inst.p1 = inst.p0 + 4.0 * unif(rng);
    inst.p2 = n + (2.0 * inst.p0 - n) * 0.999 * unif(rng);
    inst.gamma3 = 0.05 + 1.5 * unif(rng);
    double g3m = inst.gamma3 - inst.epsilon;

    double r0_lo = std::max(0.0, g3m - 1.0);
    double r0_hi = std::min(g3m, 0.999 * n / inst.p1);
    if (!(r0_hi > r0_lo)) continue;
    inst.r0 = r0_lo + (r0_hi - r0_lo) * unif(rng);

    double r1_lo = std::max(
        {g3m, 1.0, 0.5 * (1.0 + g3m - n / inst.p0 + 2.0 * n / inst.p1)});
    inst.r1 = r1_lo + 2.0 * unif(rng);

    double r2_hi = std::min(
        {inst.r0, inst.r0 + 1.0 - g3m,
         0.999 * std::min(n / inst.p2, 2.0 * n / inst.p2 - n / inst.p0)});
    if (!(r2_hi >= 0.0)) continue;
    inst.r2 = r2_hi * unif(rng);

    auto [g1, g2] = min_gamma(inst);
    inst.gamma1 = g1 + 0.01 + 2.0 * unif(rng);
    inst.gamma2 = g2 + 0.01 + 2.0 * unif(rng);
    return inst;
  }
}

}  // namespace gmhd::test
