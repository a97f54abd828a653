#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gmhd/multiplier.hpp"
#include "gmhd/nonlinear.hpp"
#include "gmhd/spectral_field.hpp"
#include "gmhd/theorem.hpp"

namespace gmhd {

/// Sobolev indices of the weighted trajectory norm: the velocity part is
/// measured in (r0, p0) and, with weight t^{a1}, in (r1, p1); the magnetic
/// part in (r2, p2).
struct NormIndices {
  double r0 = 0.0, p0 = 2.0;
  double r1 = 1.0, p1 = 2.0;
  double r2 = 0.0, p2 = 2.0;
};

struct SolverConfig {
  double horizon = 0.1;       // T, the end of (0, T]
  int nodes = 16;             // M uniform time samples on (0, T]
  double picard_tol = 1e-10;  // weighted fixed-point residual threshold
  int max_iters = 50;
  double a1 = 0.0;  // weight exponent, typically from compute_a1
  double alpha = 1.0, nu1 = 1.0, nu2 = 1.0;
  NormIndices norms{};
  DealiasRule rule{};
  bool nonlinear_enabled = true;  // test hook: drop the Duhamel integrals
  double blowup_factor = 1e6;

  void validate() const;
  double node_time(int j) const {  // j in [0, nodes)
    return horizon * double(j + 1) / double(nodes);
  }
};

/// Time-sampled pair (u, B) on (0, T], plus the initial data that generated
/// it. All states share one grid and stay divergence-free.
struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> u;
  std::vector<SpectralField> B;
  SpectralField initial_u;
  SpectralField initial_B;

  int nodes() const { return int(times.size()); }
  const Grid& grid() const { return initial_u.grid(); }
};

struct ContractionDiagnostics {
  std::vector<double> residuals;  // weighted ||iterate_{k+1} - iterate_k||
  // Geometric mean of successive residual ratios; present once at least 3
  // residuals exist.
  std::optional<double> estimated_ratio;
  int iterations = 0;
  bool converged = false;
  // Trajectory norms of the returned iterate.
  double x_deviation_sup = 0.0;  // sup ||u(t) - e^{t nu1 L1} u0||_{r0,p0}
  double x_weighted_sup = 0.0;   // sup t^{a1} ||u(t)||_{r1,p1}
  double y_deviation_sup = 0.0;  // sup ||B(t) - e^{t nu2 L2} B0||_{r2,p2}
};

struct XYNorms {
  double x_deviation_sup = 0.0;
  double x_weighted_sup = 0.0;
  double y_deviation_sup = 0.0;
};

class SolverError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Iteration stopped improving before reaching picard_tol: the horizon is
/// too large for the map to contract.
class NonConvergenceError : public SolverError {
 public:
  explicit NonConvergenceError(std::vector<double> residuals);
  std::vector<double> residuals;
};

/// An iterate exceeded blowup_factor times the initial size.
class BlowupError : public SolverError {
  using SolverError::SolverError;
};

class A1OutOfRangeError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weight exponent of the auxiliary norm:
/// (r1 - r0 + n/p0 - n/p1) / gamma1^-. Throws A1OutOfRangeError unless the
/// value lies in [0, 1).
double compute_a1(const TheoremInstance& inst);

/// The semigroup-only trajectory u = e^{t nu1 L1} u0, B = e^{t nu2 L2} B0:
/// the natural zeroth iterate.
Trajectory semigroup_trajectory(const SpectralField& u0,
                                const SpectralField& B0,
                                const MultiplierSet& specs,
                                const SolverConfig& cfg);

/// One application of the Duhamel map to a trajectory: semigroup term plus
/// the integral term evaluated by trapezoidal quadrature over the stored
/// nodes (the s = t endpoint uses the identity kernel). Output states are
/// divergence-free. Throws on grid/node mismatch and on initial data that is
/// not divergence-free.
Trajectory duhamel_phi(const SpectralField& u0, const SpectralField& B0,
                       const Trajectory& traj, const MultiplierSet& specs,
                       const SolverConfig& cfg);

/// Picard iteration of the Duhamel map starting from the semigroup
/// trajectory, stopping when the weighted residual drops below picard_tol.
/// Throws NonConvergenceError / BlowupError as appropriate.
std::pair<Trajectory, ContractionDiagnostics> picard_solve(
    const SpectralField& u0, const SpectralField& B0,
    const MultiplierSet& specs, const SolverConfig& cfg);

/// Weighted distance between two trajectories on the same nodes:
/// sup_t (||du||_{r0,p0} + t^{a1} ||du||_{r1,p1}) + sup_t ||dB||_{r2,p2}.
double weighted_distance(const Trajectory& a, const Trajectory& b,
                         const SolverConfig& cfg);

/// Trajectory norms mirroring the solution-space definitions.
XYNorms trajectory_norms(const Trajectory& traj, const MultiplierSet& specs,
                         const SolverConfig& cfg);

/// As above but with the indices and weight exponent drawn from a parameter
/// instance ((r0,p0), (r1,p1), (r2,p2) and a1 from compute_a1).
XYNorms trajectory_norms(const Trajectory& traj, const MultiplierSet& specs,
                         const SolverConfig& cfg, const TheoremInstance& inst);

struct NodeDiagnostics {
  double t = 0.0;
  double div_residual = 0.0;
  double kinetic_energy = 0.0;   // ||u||_2^2
  double magnetic_energy = 0.0;  // ||B||_2^2
  double filtered_energy = 0.0;  // <u, (1 - alpha^2 L3) u>
};

std::vector<NodeDiagnostics> diagnostics(const Trajectory& traj,
                                         const MultiplierSet& specs,
                                         const SolverConfig& cfg);

}  // namespace gmhd
