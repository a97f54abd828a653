#include "gmhd/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gmhd {

namespace {

// Mode-wise multiplication by a real radial factor, shared by all four
// operators. factor(|k|) is evaluated once per distinct flat index.
template <typename Factor>
SpectralField scale_modes(const SpectralField& f, Factor&& factor) {
  SpectralField out = f;
  const Grid& grid = f.grid();
  std::vector<double> factors(grid.modes());
  for (int flat = 0; flat < grid.modes(); ++flat)
    factors[flat] = factor(grid.k_norm(flat));
  for (int c = 0; c < out.components(); ++c) {
    auto& comp = out.component(c);
    for (int flat = 0; flat < grid.modes(); ++flat) comp[flat] *= factors[flat];
  }
  return out;
}

}  // namespace

SpectralField apply_multiplier(const MultiplierSpec& spec,
                               const SpectralField& f) {
  return scale_modes(f, [&](double kn) { return symbol_eval(spec, kn); });
}

SpectralField apply_semigroup(const MultiplierSpec& spec, double t,
                              const SpectralField& f) {
  if (!(t >= 0.0))
    throw std::invalid_argument("apply_semigroup: t must be >= 0");
  if (t == 0.0) return f;
  return scale_modes(
      f, [&](double kn) { return std::exp(t * symbol_eval(spec, kn)); });
}

SpectralField apply_helmholtz_inverse(const MultiplierSpec& spec,
                                      const SpectralField& f, double alpha) {
  double a2 = alpha * alpha;
  return scale_modes(
      f, [&](double kn) { return 1.0 / (1.0 - a2 * symbol_eval(spec, kn)); });
}

SpectralField leray_project(const SpectralField& f) {
  const Grid& grid = f.grid();
  int dim = grid.dim();
  if (f.components() != dim)
    throw std::invalid_argument("leray_project: components != dim");

  SpectralField out = f;
  for (int flat = 0; flat < grid.modes(); ++flat) {
    double k_sq = grid.k_norm_sq(flat);
    if (k_sq == 0.0) continue;
    auto k = grid.wavevector(flat);
    // Two passes: the first leaves a cancellation residue proportional to
    // the pre-projection magnitude, which for nearly-gradient modes can
    // dwarf what survives; the second shrinks it to the scale of the
    // projected mode itself.
    for (int pass = 0; pass < 2; ++pass) {
      std::complex<double> dot{0.0, 0.0};
      for (int c = 0; c < dim; ++c) dot += double(k[c]) * out.coef(c, flat);
      dot /= k_sq;
      for (int c = 0; c < dim; ++c) out.coef(c, flat) -= double(k[c]) * dot;
    }
  }
  return out;
}

}  // namespace gmhd
