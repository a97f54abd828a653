#pragma once

#include <functional>

namespace gmhd {

/// Adaptive Simpson quadrature of f over [a, b] to the given relative
/// tolerance. The integrand must be smooth on the interval.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-10);

/// tanh-sinh quadrature of int_0^1 f(sigma, 1-sigma) dsigma. The integrand
/// receives sigma and 1-sigma separately so endpoint factors like
/// sigma^{-b} (1-sigma)^{-a} can be evaluated without cancellation; the
/// node substitution clusters points at both endpoints, so integrable
/// endpoint singularities converge to near machine precision.
double tanh_sinh_unit(
    const std::function<double(double, double)>& f, int levels = 10);

}  // namespace gmhd
