#include "gmhd/nonlinear.hpp"

#include <stdexcept>
#include <vector>

#include "gmhd/fft.hpp"
#include "gmhd/operators.hpp"

namespace gmhd {

namespace {

using Complex = std::complex<double>;

void require_same_grid(const SpectralField& x, const SpectralField& y) {
  if (!(x.grid() == y.grid()))
    throw std::invalid_argument("nonlinear term: grid mismatch");
}

// Physical-space samples of every component of f (optionally dealiased
// first). Each entry is one component on the grid.
std::vector<std::vector<Complex>> to_physical(const SpectralField& f,
                                              const DealiasRule& rule) {
  SpectralField work = f;
  dealias(work, rule);
  std::vector<std::vector<Complex>> phys(work.components());
  for (int c = 0; c < work.components(); ++c) {
    phys[c] = std::move(work.component(c));
    fft::inverse(f.grid(), phys[c].data());
  }
  return phys;
}

}  // namespace

void dealias(SpectralField& f, const DealiasRule& rule) {
  if (rule.mode == DealiasMode::none) return;
  const Grid& grid = f.grid();
  double cutoff = double(grid.points_per_axis()) / 3.0;
  for (int c = 0; c < f.components(); ++c) {
    auto& comp = f.component(c);
    for (int flat = 0; flat < grid.modes(); ++flat) {
      auto k = grid.wavevector(flat);
      for (int d = 0; d < grid.dim(); ++d) {
        if (std::abs(k[d]) > cutoff) {
          comp[flat] = Complex{0.0, 0.0};
          break;
        }
      }
    }
  }
}

SpectralField tensor_divergence(const SpectralField& x, const SpectralField& y,
                                const DealiasRule& rule) {
  require_same_grid(x, y);
  const Grid& grid = x.grid();
  int dim = grid.dim();
  if (x.components() != dim || y.components() != dim)
    throw std::invalid_argument("tensor_divergence: components != dim");

  auto xp = to_physical(x, rule);
  auto yp = to_physical(y, rule);

  // (div(x (x) y))_j = sum_i d_i (x_i y_j); contraction over the first
  // tensor index, divergence taken spectrally as i k_i.
  SpectralField out(grid, dim);
  std::vector<Complex> prod(grid.modes());
  for (int j = 0; j < dim; ++j) {
    auto& out_j = out.component(j);
    for (int i = 0; i < dim; ++i) {
      for (int p = 0; p < grid.modes(); ++p) prod[p] = xp[i][p] * yp[j][p];
      fft::forward(grid, prod.data());
      for (int flat = 0; flat < grid.modes(); ++flat) {
        double ki = grid.wavevector(flat)[i];
        out_j[flat] += Complex{0.0, ki} * prod[flat];
      }
    }
  }
  dealias(out, rule);
  out.symmetrize();
  return out;
}

SpectralField w1(const SpectralField& x, const SpectralField& y,
                 const MultiplierSpec& spec3, const DealiasRule& rule,
                 double alpha) {
  return leray_project(
      apply_helmholtz_inverse(spec3, tensor_divergence(x, y, rule), alpha));
}

SpectralField w2(const SpectralField& x, const SpectralField& y,
                 const MultiplierSpec& spec3, const DealiasRule& rule,
                 double alpha) {
  require_same_grid(x, y);
  const Grid& grid = x.grid();
  int dim = grid.dim();
  if (x.components() != dim || y.components() != dim)
    throw std::invalid_argument("w2: components != dim");

  // Spectral gradients d_j x_i first, so the products only see band-limited
  // data; then sum_i y_i d_j x_i on the grid.
  SpectralField xd = x;
  dealias(xd, rule);
  auto yp = to_physical(y, rule);

  SpectralField out(grid, dim);
  std::vector<Complex> grad(grid.modes());
  std::vector<std::vector<Complex>> sums(
      dim, std::vector<Complex>(grid.modes(), Complex{0.0, 0.0}));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto& xi = xd.component(i);
      for (int flat = 0; flat < grid.modes(); ++flat) {
        double kj = grid.wavevector(flat)[j];
        grad[flat] = Complex{0.0, kj} * xi[flat];
      }
      fft::inverse(grid, grad.data());
      auto& sum_j = sums[j];
      for (int p = 0; p < grid.modes(); ++p) sum_j[p] += yp[i][p] * grad[p];
    }
  }
  for (int j = 0; j < dim; ++j) {
    fft::forward(grid, sums[j].data());
    out.component(j) = std::move(sums[j]);
  }
  dealias(out, rule);
  out.symmetrize();
  return leray_project(apply_helmholtz_inverse(spec3, out, alpha));
}

SpectralField w3(const SpectralField& x, const SpectralField& y,
                 const DealiasRule& rule) {
  return leray_project(tensor_divergence(x, y, rule));
}

SpectralField filtered_velocity(const SpectralField& u,
                                const MultiplierSpec& spec3, double alpha) {
  SpectralField out = u;
  const Grid& grid = u.grid();
  double a2 = alpha * alpha;
  std::vector<double> factors(grid.modes());
  for (int flat = 0; flat < grid.modes(); ++flat)
    factors[flat] = 1.0 - a2 * symbol_eval(spec3, grid.k_norm(flat));
  for (int c = 0; c < out.components(); ++c) {
    auto& comp = out.component(c);
    for (int flat = 0; flat < grid.modes(); ++flat) comp[flat] *= factors[flat];
  }
  return out;
}

}  // namespace gmhd
