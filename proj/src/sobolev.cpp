#include "gmhd/sobolev.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmhd/fft.hpp"

namespace gmhd {

namespace {

void validate_exponents(double r, double p) {
  if (!std::isfinite(r) || !std::isfinite(p))
    throw std::invalid_argument("sobolev_norm: r and p must be finite");
  if (p <= 1.0) throw std::invalid_argument("sobolev_norm: p must exceed 1");
}

}  // namespace

double sobolev_norm(const SpectralField& f, double r, double p) {
  validate_exponents(r, p);
  const Grid& grid = f.grid();
  int modes = grid.modes();
  int ncomp = f.components();

  // Bessel potential, then synthesis to the physical grid per component.
  std::vector<double> weight(modes);
  for (int flat = 0; flat < modes; ++flat)
    weight[flat] = std::pow(1.0 + grid.k_norm_sq(flat), 0.5 * r);

  std::vector<std::vector<std::complex<double>>> phys(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    phys[c] = f.component(c);
    for (int flat = 0; flat < modes; ++flat) phys[c][flat] *= weight[flat];
    fft::inverse(grid, phys[c].data());
  }

  // L^p quadrature under the normalized measure; pointwise Euclidean
  // magnitude across components.
  double sum = 0.0;
  for (int x = 0; x < modes; ++x) {
    double mag_sq = 0.0;
    for (int c = 0; c < ncomp; ++c) mag_sq += std::norm(phys[c][x]);
    sum += std::pow(mag_sq, 0.5 * p);
  }
  return std::pow(sum / double(modes), 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) {
  return sobolev_norm(f, 0.0, p);
}

double plancherel_norm(const SpectralField& f, double r) {
  const Grid& grid = f.grid();
  double sum = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const auto& comp = f.component(c);
    for (int flat = 0; flat < grid.modes(); ++flat)
      sum += std::pow(1.0 + grid.k_norm_sq(flat), r) * std::norm(comp[flat]);
  }
  return std::sqrt(sum);
}

}  // namespace gmhd
