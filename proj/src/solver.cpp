#include "gmhd/solver.hpp"

#include <cmath>
#include <sstream>

#include "gmhd/operators.hpp"
#include "gmhd/parallel.hpp"
#include "gmhd/sobolev.hpp"

namespace gmhd {

namespace {

constexpr double kDivFreeTol = 1e-8;

void require_divergence_free(const SpectralField& f, const char* label) {
  double res = f.divergence_residual();
  if (res > kDivFreeTol) {
    std::ostringstream msg;
    msg << label << " is not divergence-free (residual " << res << ")";
    throw std::invalid_argument(msg.str());
  }
}

void require_matching(const SpectralField& u0, const SpectralField& B0,
                      const Trajectory& traj, const SolverConfig& cfg) {
  if (!u0.same_shape(B0))
    throw std::invalid_argument("duhamel_phi: u0 and B0 shapes differ");
  if (traj.nodes() != cfg.nodes)
    throw std::invalid_argument("duhamel_phi: trajectory node count mismatch");
  for (int j = 0; j < traj.nodes(); ++j) {
    if (!(traj.u[j].grid() == u0.grid()) || !(traj.B[j].grid() == u0.grid()))
      throw std::invalid_argument("duhamel_phi: trajectory grid mismatch");
  }
}

// Integrand of the two Duhamel integrals at one time sample.
struct NonlinearTerms {
  SpectralField f1;  // W1(u,v) + W2(u,v) - W1(B,B)
  SpectralField f2;  // W3(u,B) - W3(B,u)
};

NonlinearTerms evaluate_terms(const SpectralField& u, const SpectralField& B,
                              const MultiplierSet& specs,
                              const SolverConfig& cfg) {
  SpectralField v = filtered_velocity(u, specs.l3, cfg.alpha);
  NonlinearTerms terms{
      w1(u, v, specs.l3, cfg.rule, cfg.alpha) +
          w2(u, v, specs.l3, cfg.rule, cfg.alpha) -
          w1(B, B, specs.l3, cfg.rule, cfg.alpha),
      w3(u, B, cfg.rule) - w3(B, u, cfg.rule)};
  return terms;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(horizon > 0.0))
    throw std::invalid_argument("solver: horizon must be positive");
  if (nodes < 2) throw std::invalid_argument("solver: nodes must be >= 2");
  if (!(picard_tol > 0.0))
    throw std::invalid_argument("solver: picard_tol must be positive");
  if (max_iters < 1)
    throw std::invalid_argument("solver: max_iters must be >= 1");
  if (!(alpha > 0.0 && nu1 > 0.0 && nu2 > 0.0))
    throw std::invalid_argument("solver: alpha, nu1, nu2 must be positive");
  if (!(a1 >= 0.0 && a1 < 1.0))
    throw std::invalid_argument("solver: a1 must lie in [0, 1)");
}

NonConvergenceError::NonConvergenceError(std::vector<double> res)
    : SolverError("Picard iteration did not reach tolerance; the horizon is "
                  "too large for contraction"),
      residuals(std::move(res)) {}

double compute_a1(const TheoremInstance& inst) {
  double g1m = inst.gamma1_minus();
  if (!(g1m > 0.0))
    throw std::invalid_argument("compute_a1: gamma1 - epsilon must be > 0");
  double a1 =
      (inst.r1 - inst.r0 + double(inst.n) / inst.p0 - double(inst.n) / inst.p1) /
      g1m;
  if (!(a1 >= 0.0 && a1 < 1.0)) {
    std::ostringstream msg;
    msg << "compute_a1: value " << a1 << " outside [0, 1)";
    throw A1OutOfRangeError(msg.str());
  }
  return a1;
}

Trajectory semigroup_trajectory(const SpectralField& u0,
                                const SpectralField& B0,
                                const MultiplierSet& specs,
                                const SolverConfig& cfg) {
  cfg.validate();
  Trajectory traj{std::vector<double>(cfg.nodes), {}, {}, u0, B0};
  traj.u.reserve(cfg.nodes);
  traj.B.reserve(cfg.nodes);
  for (int j = 0; j < cfg.nodes; ++j) {
    double t = cfg.node_time(j);
    traj.times[j] = t;
    traj.u.push_back(apply_semigroup(specs.l1, cfg.nu1 * t, u0));
    traj.B.push_back(apply_semigroup(specs.l2, cfg.nu2 * t, B0));
  }
  return traj;
}

Trajectory duhamel_phi(const SpectralField& u0, const SpectralField& B0,
                       const Trajectory& traj, const MultiplierSet& specs,
                       const SolverConfig& cfg) {
  cfg.validate();
  require_matching(u0, B0, traj, cfg);
  require_divergence_free(u0, "u0");
  require_divergence_free(B0, "B0");

  Trajectory out = semigroup_trajectory(u0, B0, specs, cfg);
  if (!cfg.nonlinear_enabled) return out;

  const int m = cfg.nodes;
  const double h = cfg.horizon / double(m);

  // Integrand at the quadrature samples s_0 = 0, s_1, ..., s_M; the s = 0
  // sample uses the initial data.
  std::vector<NonlinearTerms> terms;
  terms.reserve(m + 1);
  for (int i = 0; i <= m; ++i)
    terms.emplace_back(NonlinearTerms{SpectralField(u0.grid(), 1),
                                      SpectralField(u0.grid(), 1)});
  parallel_for(0, m + 1, [&](int i) {
    const SpectralField& u = (i == 0) ? u0 : traj.u[i - 1];
    const SpectralField& B = (i == 0) ? B0 : traj.B[i - 1];
    terms[i] = evaluate_terms(u, B, specs, cfg);
  });

  // Trapezoid over [0, t_j]: endpoint weights h/2, interior weight h.
  parallel_for(0, m, [&](int j) {
    SpectralField integral1(u0.grid());
    SpectralField integral2(u0.grid());
    double t = cfg.node_time(j);
    for (int i = 0; i <= j + 1; ++i) {
      double s = h * double(i);
      double weight = (i == 0 || i == j + 1) ? 0.5 * h : h;
      integral1.axpy(weight, apply_semigroup(specs.l1, cfg.nu1 * (t - s),
                                             terms[i].f1));
      integral2.axpy(weight, apply_semigroup(specs.l2, cfg.nu2 * (t - s),
                                             terms[i].f2));
    }
    out.u[j] -= integral1;
    out.B[j] -= integral2;
    // every summand is solenoidal, but summation round-off can leave modes
    // whose residual dwarfs what survives of them; one more projection pins
    // the per-mode residual down
    out.u[j] = leray_project(out.u[j]);
    out.B[j] = leray_project(out.B[j]);
  });
  return out;
}

double weighted_distance(const Trajectory& a, const Trajectory& b,
                         const SolverConfig& cfg) {
  if (a.nodes() != b.nodes())
    throw std::invalid_argument("weighted_distance: node count mismatch");
  const NormIndices& idx = cfg.norms;
  double sup_u = 0.0, sup_b = 0.0;
  for (int j = 0; j < a.nodes(); ++j) {
    SpectralField du = a.u[j] - b.u[j];
    SpectralField dB = a.B[j] - b.B[j];
    double t = a.times[j];
    double u_part = sobolev_norm(du, idx.r0, idx.p0) +
                    std::pow(t, cfg.a1) * sobolev_norm(du, idx.r1, idx.p1);
    sup_u = std::max(sup_u, u_part);
    sup_b = std::max(sup_b, sobolev_norm(dB, idx.r2, idx.p2));
  }
  return sup_u + sup_b;
}

std::pair<Trajectory, ContractionDiagnostics> picard_solve(
    const SpectralField& u0, const SpectralField& B0,
    const MultiplierSet& specs, const SolverConfig& cfg) {
  cfg.validate();
  require_divergence_free(u0, "u0");
  require_divergence_free(B0, "B0");

  auto iterate_size = [&](const Trajectory& traj) {
    double sup = 0.0;
    for (int j = 0; j < traj.nodes(); ++j)
      sup = std::max(sup, traj.u[j].l2_norm() + traj.B[j].l2_norm());
    return sup;
  };

  Trajectory current = semigroup_trajectory(u0, B0, specs, cfg);
  double initial_size = iterate_size(current);
  double blowup_limit =
      cfg.blowup_factor * std::max(initial_size, 1e-300);

  ContractionDiagnostics diag;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    Trajectory next = duhamel_phi(u0, B0, current, specs, cfg);
    double residual = weighted_distance(next, current, cfg);
    diag.residuals.push_back(residual);
    diag.iterations = k;
    current = std::move(next);

    double size = iterate_size(current);
    if (!std::isfinite(size) || size > blowup_limit) {
      std::ostringstream msg;
      msg << "iterate size " << size << " exceeded " << cfg.blowup_factor
          << " x initial (" << initial_size << ") at iteration " << k;
      throw BlowupError(msg.str());
    }
    if (residual <= cfg.picard_tol) {
      diag.converged = true;
      break;
    }
  }
  if (!diag.converged) throw NonConvergenceError(diag.residuals);

  if (diag.residuals.size() >= 3) {
    double log_sum = 0.0;
    int count = 0;
    for (size_t i = 1; i < diag.residuals.size(); ++i) {
      if (diag.residuals[i - 1] > 0.0 && diag.residuals[i] > 0.0) {
        log_sum += std::log(diag.residuals[i] / diag.residuals[i - 1]);
        ++count;
      }
    }
    if (count > 0) diag.estimated_ratio = std::exp(log_sum / count);
  }

  XYNorms norms = trajectory_norms(current, specs, cfg);
  diag.x_deviation_sup = norms.x_deviation_sup;
  diag.x_weighted_sup = norms.x_weighted_sup;
  diag.y_deviation_sup = norms.y_deviation_sup;
  return {std::move(current), std::move(diag)};
}

XYNorms trajectory_norms(const Trajectory& traj, const MultiplierSet& specs,
                         const SolverConfig& cfg) {
  const NormIndices& idx = cfg.norms;
  XYNorms norms;
  for (int j = 0; j < traj.nodes(); ++j) {
    double t = traj.times[j];
    SpectralField u_dev =
        traj.u[j] - apply_semigroup(specs.l1, cfg.nu1 * t, traj.initial_u);
    SpectralField b_dev =
        traj.B[j] - apply_semigroup(specs.l2, cfg.nu2 * t, traj.initial_B);
    norms.x_deviation_sup =
        std::max(norms.x_deviation_sup, sobolev_norm(u_dev, idx.r0, idx.p0));
    norms.x_weighted_sup =
        std::max(norms.x_weighted_sup,
                 std::pow(t, cfg.a1) * sobolev_norm(traj.u[j], idx.r1, idx.p1));
    norms.y_deviation_sup =
        std::max(norms.y_deviation_sup, sobolev_norm(b_dev, idx.r2, idx.p2));
  }
  return norms;
}

XYNorms trajectory_norms(const Trajectory& traj, const MultiplierSet& specs,
                         const SolverConfig& cfg,
                         const TheoremInstance& inst) {
  SolverConfig local = cfg;
  local.norms = NormIndices{inst.r0, inst.p0, inst.r1,
                            inst.p1, inst.r2, inst.p2};
  local.a1 = compute_a1(inst);
  return trajectory_norms(traj, specs, local);
}

std::vector<NodeDiagnostics> diagnostics(const Trajectory& traj,
                                         const MultiplierSet& specs,
                                         const SolverConfig& cfg) {
  std::vector<NodeDiagnostics> rows(traj.nodes());
  for (int j = 0; j < traj.nodes(); ++j) {
    NodeDiagnostics& row = rows[j];
    row.t = traj.times[j];
    row.div_residual = std::max(traj.u[j].divergence_residual(),
                                traj.B[j].divergence_residual());
    double u_norm = traj.u[j].l2_norm();
    double b_norm = traj.B[j].l2_norm();
    row.kinetic_energy = u_norm * u_norm;
    row.magnetic_energy = b_norm * b_norm;
    row.filtered_energy = inner_product_l2(
        traj.u[j], filtered_velocity(traj.u[j], specs.l3, cfg.alpha));
  }
  return rows;
}

}  // namespace gmhd
