#pragma once

#include <cstdint>
#include <vector>

#include "gmhd/grid.hpp"
#include "gmhd/multiplier.hpp"

namespace gmhd {

/// All verifiers exercise torus-grid proxies of the operator estimates:
/// constants are reported and checked for stability, never asserted against
/// absolute values.

struct SemigroupEstimateReport {
  std::vector<double> times;
  /// Worst observed norm ratio ||e^{tL} f||_{r2,p2} / ||f||_{r1,p1} over the
  /// random trials; for p1 = p2 = 2 the candidate set additionally contains
  /// the grid's worst single mode, where the supremum is attained.
  std::vector<double> observed;
  /// Continuum radial maximization of |k|^{r2-r1} e^{t symbol(|k|)} over
  /// |k| in [0, k_max]; filled when p1 = p2 = 2.
  std::vector<double> mode_sup;
  double fitted_exponent = 0.0;     // least-squares slope of log observed
  double predicted_exponent = 0.0;  // -(r2 - r1 + n/p1 - n/p2)/gamma^-
  double relative_error = 0.0;
};

/// Smoothing estimate for e^{tL}. Requires p1 <= p2, r1 <= r2, and a time
/// range above the grid's resolving scale (below it the worst case
/// saturates).
SemigroupEstimateReport verify_semigroup_estimate(
    const MultiplierSpec& spec, double r1, double p1, double r2, double p2,
    const Grid& grid, double t_min, double t_max, int t_count, int trials,
    std::uint64_t seed);

struct RefinementRow {
  int points_per_axis = 0;
  double sup_ratio = 0.0;
};

struct RatioReport {
  std::vector<RefinementRow> rows;
  double max_growth = 0.0;  // max over refinements of sup[i+1]/sup[i] - 1
  bool bounded = false;     // max_growth below the stability threshold
};

/// Inverse-operator estimate: sup over random fields of
/// ||(1 - L3)^{-1} f||_{r,p} / ||f||_{r - gamma3^-, p}, per grid size.
/// bounded requires < 5% growth per refinement.
RatioReport verify_inverse_estimate(const MultiplierSpec& spec3, double r,
                                    double p, int dim,
                                    const std::vector<int>& grid_sizes,
                                    int trials, std::uint64_t seed);

struct IntegralEstimateReport {
  double sup_value = 0.0;    // max over t samples of the quadrature
  double bound_form = 0.0;   // T^{1-a-b} Beta(1-a, 1-b)
  double relative_error = 0.0;
  double scaling_exponent = 0.0;  // log2 of value(2T)/value(T)
};

/// Singular convolution integral sup_{t<=T} int_0^t (t-s)^{-a} s^{-b} ds,
/// evaluated with endpoint-clustered nodes after the substitution s = t
/// sigma. Requires 0 < a, b and a + b < 1.
IntegralEstimateReport verify_integral_estimate(double a, double b, double T,
                                                int quad_points = 2048,
                                                int t_samples = 16);

struct EmbeddingReport {
  double q = 0.0;  // target integrability from the scaling relation
  RatioReport ratios;
};

/// Sobolev embedding ||f||_{r,q} <= C ||f||_{s,p} with
/// 1/q - r/n = 1/p - s/n. Requires s >= r and (s - r) p < n.
EmbeddingReport verify_sobolev_embedding(double s, double r, double p, int dim,
                                         const std::vector<int>& grid_sizes,
                                         int trials, std::uint64_t seed);

struct HolderSplit {
  double p1 = 4.0, p2 = 4.0;
  double q1 = 4.0, q2 = 4.0;
};

/// Product estimate ||fg||_{r,p} <= C (||f||_{p1} ||g||_{r,p2} +
/// ||f||_{r,q1} ||g||_{q2}) over random scalar pairs. The split must satisfy
/// 1/p = 1/p1 + 1/p2 = 1/q1 + 1/q2 with every exponent in (1, inf).
RatioReport verify_product_estimate(double r, double p,
                                    const HolderSplit& split, int dim,
                                    const std::vector<int>& grid_sizes,
                                    int trials, std::uint64_t seed);

class SpectralField;

/// The single-pair ratio behind verify_product_estimate, for scalar fields
/// on one grid. The product is evaluated pointwise and dealiased.
double product_estimate_ratio(const SpectralField& f, const SpectralField& g,
                              double r, double p, const HolderSplit& split);

}  // namespace gmhd
