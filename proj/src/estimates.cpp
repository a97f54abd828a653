#include "gmhd/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gmhd/fft.hpp"
#include "gmhd/initial_data.hpp"
#include "gmhd/nonlinear.hpp"
#include "gmhd/operators.hpp"
#include "gmhd/parallel.hpp"
#include "gmhd/quadrature.hpp"
#include "gmhd/sobolev.hpp"

namespace gmhd {

namespace {

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2)
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
  std::vector<double> out(count);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    out[i] = std::exp(llo + (lhi - llo) * i / (count - 1));
  return out;
}

double least_squares_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
  double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Maximize phi on [lo, hi] by golden-section search; phi must be unimodal on
// the bracket.
template <typename F>
double golden_max(F&& phi, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = phi(c), fd = phi(d);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (std::abs(b) + 1.0); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = phi(d);
    }
  }
  return std::max(fc, fd);
}

// Continuum radial maximization of |k|^delta e^{t symbol(|k|)}.
double homogeneous_mode_sup(const MultiplierSpec& spec, double delta, double t,
                            double k_max) {
  auto value = [&](double kn) {
    double weight = (delta == 0.0) ? 1.0 : std::pow(kn, delta);
    return weight * std::exp(t * symbol_eval(spec, kn));
  };
  if (delta == 0.0) return 1.0;  // symbol <= 0, so the origin wins

  // Coarse log-spaced scan to bracket the maximizer, then refine.
  const int scan = 1024;
  double best = value(k_max);
  int best_i = scan;
  for (int i = 0; i <= scan; ++i) {
    double kn = k_max * std::exp(-12.0 * (1.0 - double(i) / scan));
    double v = value(kn);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  auto k_at = [&](int i) {
    return k_max * std::exp(-12.0 * (1.0 - double(std::clamp(i, 0, scan)) /
                                               scan));
  };
  return std::max(best, golden_max(value, k_at(best_i - 1), k_at(best_i + 1)));
}

// Exact p = 2 operator bound on the grid: the worst single mode.
double grid_mode_sup(const MultiplierSpec& spec, double delta, double t,
                     const Grid& grid) {
  double best = 0.0;
  for (int flat = 0; flat < grid.modes(); ++flat) {
    double k_sq = grid.k_norm_sq(flat);
    double v = std::pow(1.0 + k_sq, 0.5 * delta) *
               std::exp(t * symbol_eval(spec, std::sqrt(k_sq)));
    best = std::max(best, v);
  }
  return best;
}

int band_of(const Grid& grid) { return grid.points_per_axis() / 3; }

}  // namespace

SemigroupEstimateReport verify_semigroup_estimate(
    const MultiplierSpec& spec, double r1, double p1, double r2, double p2,
    const Grid& grid, double t_min, double t_max, int t_count, int trials,
    std::uint64_t seed) {
  if (!(p1 <= p2))
    throw std::invalid_argument("semigroup estimate: requires p1 <= p2");
  if (!(r1 <= r2))
    throw std::invalid_argument("semigroup estimate: requires r1 <= r2");
  if (trials < 1)
    throw std::invalid_argument("semigroup estimate: trials must be >= 1");

  SemigroupEstimateReport report;
  report.times = log_spaced(t_min, t_max, t_count);

  std::vector<SpectralField> fields;
  std::vector<double> input_norms;
  fields.reserve(trials);
  for (int i = 0; i < trials; ++i) {
    fields.push_back(random_band_limited_field(
        grid, grid.dim(), 1.0, band_of(grid), seed + std::uint64_t(i), false));
    input_norms.push_back(sobolev_norm(fields.back(), r1, p1));
  }

  bool exact_mode_path = (p1 == 2.0 && p2 == 2.0);
  double delta = r2 - r1;
  report.observed.assign(report.times.size(), 0.0);
  if (exact_mode_path) report.mode_sup.assign(report.times.size(), 0.0);

  parallel_for(0, int(report.times.size()), [&](int ti) {
    double t = report.times[ti];
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      double out_norm = sobolev_norm(apply_semigroup(spec, t, fields[i]), r2, p2);
      worst = std::max(worst, out_norm / input_norms[i]);
    }
    if (exact_mode_path) {
      worst = std::max(worst, grid_mode_sup(spec, delta, t, grid));
      report.mode_sup[ti] = homogeneous_mode_sup(spec, delta, t, grid.k_max());
    }
    report.observed[ti] = worst;
  });

  std::vector<double> log_t(report.times.size()), log_r(report.times.size());
  for (size_t i = 0; i < report.times.size(); ++i) {
    log_t[i] = std::log(report.times[i]);
    log_r[i] = std::log(report.observed[i]);
  }
  report.fitted_exponent = least_squares_slope(log_t, log_r);
  double n = grid.dim();
  report.predicted_exponent =
      -(r2 - r1 + n / p1 - n / p2) / spec.gamma_minus();
  double denom = std::max(std::abs(report.predicted_exponent), 1e-300);
  report.relative_error =
      std::abs(report.fitted_exponent - report.predicted_exponent) / denom;
  return report;
}

RatioReport verify_inverse_estimate(const MultiplierSpec& spec3, double r,
                                    double p, int dim,
                                    const std::vector<int>& grid_sizes,
                                    int trials, std::uint64_t seed) {
  if (grid_sizes.empty())
    throw std::invalid_argument("inverse estimate: no grid sizes");
  RatioReport report;
  double source_r = r - spec3.gamma_minus();
  for (int n : grid_sizes) {
    Grid grid(dim, n);
    double sup = 0.0;
    for (int i = 0; i < trials; ++i) {
      SpectralField f = random_band_limited_field(
          grid, dim, 1.0, band_of(grid), seed + std::uint64_t(i), false);
      double num = sobolev_norm(apply_helmholtz_inverse(spec3, f), r, p);
      double den = sobolev_norm(f, source_r, p);
      sup = std::max(sup, num / den);
    }
    report.rows.push_back({n, sup});
  }
  for (size_t i = 1; i < report.rows.size(); ++i)
    report.max_growth =
        std::max(report.max_growth, report.rows[i].sup_ratio /
                                            report.rows[i - 1].sup_ratio -
                                        1.0);
  report.bounded = report.max_growth < 0.05;
  return report;
}

IntegralEstimateReport verify_integral_estimate(double a, double b, double T,
                                                int quad_points,
                                                int t_samples) {
  if (!(a > 0.0 && b > 0.0))
    throw std::invalid_argument("integral estimate: a, b must be positive");
  if (!(a + b < 1.0))
    throw std::invalid_argument("integral estimate: requires a + b < 1");
  if (!(T > 0.0))
    throw std::invalid_argument("integral estimate: T must be positive");
  if (t_samples < 1)
    throw std::invalid_argument("integral estimate: t_samples must be >= 1");

  int levels = std::max(6, int(std::ceil(std::log2(double(quad_points)))));

  // int_0^t (t-s)^{-a} s^{-b} ds with s = t sigma; sigma and 1 - sigma come
  // from the node rule separately, so neither endpoint factor cancels.
  auto value_at = [&](double t) {
    return tanh_sinh_unit(
        [&](double sigma, double one_minus) {
          return t * std::pow(t * one_minus, -a) * std::pow(t * sigma, -b);
        },
        levels);
  };

  IntegralEstimateReport report;
  for (int i = 1; i <= t_samples; ++i) {
    double t = T * double(i) / double(t_samples);
    report.sup_value = std::max(report.sup_value, value_at(t));
  }
  report.bound_form =
      std::pow(T, 1.0 - a - b) *
      std::exp(std::lgamma(1.0 - a) + std::lgamma(1.0 - b) -
               std::lgamma(2.0 - a - b));
  report.relative_error =
      std::abs(report.sup_value - report.bound_form) / report.bound_form;
  report.scaling_exponent = std::log2(value_at(2.0 * T) / value_at(T));
  return report;
}

EmbeddingReport verify_sobolev_embedding(double s, double r, double p, int dim,
                                         const std::vector<int>& grid_sizes,
                                         int trials, std::uint64_t seed) {
  if (!(s >= r))
    throw std::invalid_argument("embedding: requires s >= r");
  double n = dim;
  if (!((s - r) * p < n))
    throw std::invalid_argument("embedding: requires (s - r) p < n");
  double inv_q = 1.0 / p - (s - r) / n;
  if (!(inv_q > 0.0 && inv_q < 1.0))
    throw std::invalid_argument("embedding: scaling relation gives q outside "
                                "(1, inf)");
  if (grid_sizes.empty())
    throw std::invalid_argument("embedding: no grid sizes");

  EmbeddingReport report;
  report.q = 1.0 / inv_q;
  for (int ng : grid_sizes) {
    Grid grid(dim, ng);
    double sup = 0.0;
    for (int i = 0; i < trials; ++i) {
      SpectralField f = random_band_limited_field(
          grid, dim, 1.0, band_of(grid), seed + std::uint64_t(i), false);
      sup = std::max(sup, sobolev_norm(f, r, report.q) / sobolev_norm(f, s, p));
    }
    report.ratios.rows.push_back({ng, sup});
  }
  auto& rat = report.ratios;
  for (size_t i = 1; i < rat.rows.size(); ++i)
    rat.max_growth = std::max(
        rat.max_growth,
        rat.rows[i].sup_ratio / rat.rows[i - 1].sup_ratio - 1.0);
  rat.bounded = rat.max_growth < 0.10;
  return report;
}

RatioReport verify_product_estimate(double r, double p,
                                    const HolderSplit& split, int dim,
                                    const std::vector<int>& grid_sizes,
                                    int trials, std::uint64_t seed) {
  if (!(r >= 0.0)) throw std::invalid_argument("product estimate: r < 0");
  auto check_exponent = [](double e) {
    if (!(e > 1.0 && std::isfinite(e)))
      throw std::invalid_argument("product estimate: invalid split exponent");
  };
  check_exponent(p);
  check_exponent(split.p1);
  check_exponent(split.p2);
  check_exponent(split.q1);
  check_exponent(split.q2);
  if (std::abs(1.0 / split.p1 + 1.0 / split.p2 - 1.0 / p) > 1e-12 ||
      std::abs(1.0 / split.q1 + 1.0 / split.q2 - 1.0 / p) > 1e-12)
    throw std::invalid_argument(
        "product estimate: split does not sum to 1/p");
  if (grid_sizes.empty())
    throw std::invalid_argument("product estimate: no grid sizes");

  RatioReport report;
  for (int ng : grid_sizes) {
    Grid grid(dim, ng);
    double sup = 0.0;
    for (int i = 0; i < trials; ++i) {
      SpectralField f = random_band_limited_field(
          grid, 1, 1.0, band_of(grid), seed + 2 * std::uint64_t(i), false);
      SpectralField g = random_band_limited_field(
          grid, 1, 1.0, band_of(grid), seed + 2 * std::uint64_t(i) + 1,
          false);
      sup = std::max(sup, product_estimate_ratio(f, g, r, p, split));
    }
    report.rows.push_back({ng, sup});
  }
  for (size_t i = 1; i < report.rows.size(); ++i)
    report.max_growth =
        std::max(report.max_growth, report.rows[i].sup_ratio /
                                            report.rows[i - 1].sup_ratio -
                                        1.0);
  report.bounded = report.max_growth < 0.10;
  return report;
}

double product_estimate_ratio(const SpectralField& f, const SpectralField& g,
                              double r, double p, const HolderSplit& split) {
  if (f.components() != 1 || g.components() != 1 || !f.same_shape(g))
    throw std::invalid_argument(
        "product estimate: expects scalar fields on one grid");
  const Grid& grid = f.grid();
  // Pointwise scalar product with alias control: the exact truncated
  // convolution of band-limited inputs.
  auto fp = f.component(0);
  auto gp = g.component(0);
  fft::inverse(grid, fp.data());
  fft::inverse(grid, gp.data());
  SpectralField fg(grid, 1);
  auto& prod = fg.component(0);
  for (int x = 0; x < grid.modes(); ++x) prod[x] = fp[x] * gp[x];
  fft::forward(grid, prod.data());
  dealias(fg, DealiasRule{DealiasMode::two_thirds});
  fg.symmetrize();

  double num = sobolev_norm(fg, r, p);
  double den = lp_norm(f, split.p1) * sobolev_norm(g, r, split.p2) +
               sobolev_norm(f, r, split.q1) * lp_norm(g, split.q2);
  return num / den;
}

}  // namespace gmhd
