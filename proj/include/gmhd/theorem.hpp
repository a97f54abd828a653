#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmhd/gfunction.hpp"

namespace gmhd {

/// Parameter tuple fed to the condition engine. epsilon is the shared slack
/// realizing strict exponents: gamma_i^- = gamma_i - epsilon.
struct TheoremInstance {
  int n = 3;
  double r0 = 0.0, r1 = 2.0, r2 = 0.0;
  double p0 = 3.0, p1 = 3.0, p2 = 3.0;
  double gamma1 = 5.5, gamma2 = 2.5, gamma3 = 1.0;
  double epsilon = 1e-9;

  double gamma1_minus() const { return gamma1 - epsilon; }
  double gamma2_minus() const { return gamma2 - epsilon; }
  double gamma3_minus() const { return gamma3 - epsilon; }

  /// Throws std::invalid_argument when the tuple is malformed (regardless of
  /// whether the inequality system holds).
  void validate() const;
};

enum class Relation { ge, gt, le, lt };

const char* relation_symbol(Relation rel);

/// One evaluated inequality "lhs REL rhs". The name is a stable identifier;
/// the anchor spells out the inequality in terms of the instance fields.
struct Condition {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::ge;
  bool satisfied = false;
  std::string anchor;
  bool near_boundary = false;  // |lhs - rhs| < 1e-12: verdict is fragile
};

struct ConditionReport {
  TheoremInstance instance;
  std::vector<Condition> conditions;
  bool feasible = false;  // conjunction of all satisfied flags
  // Suprema of the right-hand sides the gamma conditions compare against
  // (bounds on gamma1^- and gamma2^-).
  double min_gamma1 = 0.0;
  double min_gamma2 = 0.0;
  std::vector<std::string> warnings;
  // For special-case reports: the closed-form minimum and the agreement flag.
  std::optional<double> specialized_min_gamma1;
};

/// Evaluate the full inequality system on the given instance, with exact
/// floating comparisons. Violations are reported, never thrown.
ConditionReport check_hypotheses(const TheoremInstance& inst);

/// Infimum admissible (gamma1, gamma2) for the instance's remaining fields:
/// the gamma right-hand-side suprema translated back from the minus scale
/// (+ epsilon).
std::pair<double, double> min_gamma(const TheoremInstance& inst);

enum class SpecialCase { thm_1_1, thm_1_2 };

struct SpecialCaseParams {
  int n = 3;
  double p = 3.0;
  double q = 3.0;
  double gamma3 = 1.0;
  double epsilon = 1e-9;
  // When unset, gamma1/gamma2 default to just above the admissible minimum.
  std::optional<double> gamma1;
  std::optional<double> gamma2;
};

/// Instantiate the general system for one of the two reduced settings
/// (thm_1_1: r0 = r2 = 0, r1 = 2; thm_1_2: r0 = n/2p, r1 = 2, r2 = n/2q),
/// check the case's own parameter domain, delegate to check_hypotheses, and
/// verify that the generic minimum matches the closed form (6 - gamma3^- for
/// thm_1_1, 6 - gamma3^- - n/p for thm_1_2).
ConditionReport check_special_cases(SpecialCase kind,
                                    const SpecialCaseParams& params);

/// One dominance identity between two gamma right-hand sides: the stronger
/// bound minus the weaker one, together with its closed form.
struct DominanceRecord {
  std::string name;
  double difference = 0.0;   // RHS(stronger) - RHS(weaker)
  double closed_form = 0.0;  // the reduced expression for the same quantity
  bool matches_closed_form = false;  // |difference - closed_form| <= 1e-12
  bool nonneg = false;               // difference >= -1e-12
};

/// The four dominance identities used to reduce the inequality lists.
/// Meaningful when the instance satisfies the structural hypotheses.
std::vector<DominanceRecord> dominance_audit(const TheoremInstance& inst);

enum class AdmissibilityKind { tao, wu, yamazaki };

struct AdmissibilityResult {
  double partial_integral = 0.0;  // int_1^X of the kind's integrand
  bool diverging = false;
  // Partial integrals at X = 1e2, 1e4, 1e6 and the increment ratio backing
  // the divergence verdict.
  std::array<double, 3> checkpoints{};
  double increment_ratio = 0.0;
};

/// Evaluate the damping-admissibility integral of the given kind with every
/// g_i set to the same g: tao 1/(s g^4), wu 1/(s (2g)^2),
/// yamazaki 1/(s g^5). diverging is an increment-growth heuristic over
/// X in {1e2, 1e4, 1e6} (evidence, not proof). Requires X > 1.
AdmissibilityResult g_admissibility(const GFunction& g, AdmissibilityKind kind,
                                    double X);

struct MikhlinReport {
  struct Order {
    int k = 0;
    double sup_weighted = 0.0;  // sup over samples of s^k |g^(k)(s)|
    bool finite = false;
  };
  std::vector<Order> orders;
  bool pass = false;  // all suprema finite
};

/// Finite-difference check of the multiplier smoothness condition
/// |g^(k)(s)| <= C s^{-k} on log-spaced samples of [1, 1e6].
/// Supports 1 <= max_order <= 4.
MikhlinReport mikhlin_check(const std::function<double(double)>& g,
                            int max_order, int samples = 200);

inline MikhlinReport mikhlin_check(const GFunction& g, int max_order,
                                   int samples = 200) {
  return mikhlin_check([g](double s) { return g(s); }, max_order, samples);
}

}  // namespace gmhd
