#include "gmhd/initial_data.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gmhd/operators.hpp"

namespace gmhd {

SpectralField single_mode_field(const Grid& grid, const std::array<int, 3>& k,
                                double amplitude) {
  int dim = grid.dim();
  double k_sq = 0.0;
  for (int d = 0; d < dim; ++d) {
    if (std::abs(k[d]) >= grid.points_per_axis() / 2)
      throw std::invalid_argument("single_mode_field: mode outside grid band");
    k_sq += double(k[d]) * double(k[d]);
  }
  for (int d = dim; d < 3; ++d)
    if (k[d] != 0)
      throw std::invalid_argument("single_mode_field: mode has too many axes");
  if (k_sq == 0.0)
    throw std::invalid_argument("single_mode_field: k must be nonzero");

  // Unit vector orthogonal to k: rotate in 2D, cross with the least-aligned
  // axis in 3D.
  std::array<double, 3> e{0.0, 0.0, 0.0};
  if (dim == 2) {
    e[0] = -k[1];
    e[1] = k[0];
  } else {
    int axis = 0;
    for (int d = 1; d < 3; ++d)
      if (std::abs(k[d]) < std::abs(k[axis])) axis = d;
    std::array<double, 3> a{0.0, 0.0, 0.0};
    a[axis] = 1.0;
    e[0] = a[1] * k[2] - a[2] * k[1];
    e[1] = a[2] * k[0] - a[0] * k[2];
    e[2] = a[0] * k[1] - a[1] * k[0];
  }
  double e_norm = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
  for (double& v : e) v /= e_norm;

  // cos(k.x) = (e^{ik.x} + e^{-ik.x}) / 2
  SpectralField f(grid);
  std::array<int, 3> neg{0, 0, 0};
  for (int d = 0; d < dim; ++d) neg[d] = -k[d];
  for (int c = 0; c < dim; ++c) {
    f.set_mode(c, k, {0.5 * amplitude * e[c], 0.0});
    f.set_mode(c, neg, {0.5 * amplitude * e[c], 0.0});
  }
  return f;
}

SpectralField taylor_green_like_field(const Grid& grid, double amplitude) {
  SpectralField f(grid);
  // sin x cos y = (1/4i)(e^{i(x+y)} + e^{i(x-y)} - e^{i(-x+y)} - e^{-i(x+y)})
  const std::complex<double> quarter_over_i{0.0, -0.25};
  auto add = [&](int c, std::array<int, 3> k, std::complex<double> v) {
    f.set_mode(c, k, f.mode(c, k) + amplitude * v);
  };
  if (grid.dim() == 2) {
    add(0, {1, 1, 0}, quarter_over_i);
    add(0, {1, -1, 0}, quarter_over_i);
    add(0, {-1, 1, 0}, -quarter_over_i);
    add(0, {-1, -1, 0}, -quarter_over_i);
    add(1, {1, 1, 0}, -quarter_over_i);
    add(1, {-1, 1, 0}, -quarter_over_i);
    add(1, {1, -1, 0}, quarter_over_i);
    add(1, {-1, -1, 0}, quarter_over_i);
  } else {
    // sin x cos y cos z and -cos x sin y cos z, w = 0
    const std::complex<double> eighth_over_i{0.0, -0.125};
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        add(0, {1, sy, sz}, eighth_over_i);
        add(0, {-1, sy, sz}, -eighth_over_i);
      }
    for (int sx : {1, -1})
      for (int sz : {1, -1}) {
        add(1, {sx, 1, sz}, -eighth_over_i);
        add(1, {sx, -1, sz}, eighth_over_i);
      }
  }
  return f;
}

SpectralField random_band_limited_field(const Grid& grid, int components,
                                        double amplitude, int band,
                                        std::uint64_t seed, bool solenoidal) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SpectralField f(grid, components);
  for (int c = 0; c < f.components(); ++c) {
    auto& comp = f.component(c);
    for (int flat = 0; flat < grid.modes(); ++flat) {
      auto k = grid.wavevector(flat);
      bool inside = true;
      for (int d = 0; d < grid.dim(); ++d)
        inside = inside && std::abs(k[d]) <= band;
      if (!inside) continue;
      comp[flat] = {gauss(rng), gauss(rng)};
    }
  }
  f.symmetrize();
  if (solenoidal && f.components() == grid.dim()) f = leray_project(f);
  double norm = f.l2_norm();
  if (norm > 0.0) f *= amplitude / norm;
  return f;
}

}  // namespace gmhd
