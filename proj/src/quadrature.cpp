#include "gmhd/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gmhd {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const std::function<double(double)>& f, double a,
                       double fa, double b, double fb, double m, double fm,
                       double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, fa, m, fm, flm);
  double right = simpson(m, fm, b, fb, frm);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                         depth - 1) +
         simpson_recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                         depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol) {
  if (!(b > a)) throw std::invalid_argument("adaptive_simpson: b must be > a");
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(a, fa, b, fb, fm);
  double scale = std::max(std::abs(whole), 1e-300);
  return simpson_recurse(f, a, fa, b, fb, m, fm, whole, rel_tol * scale, 48);
}

double tanh_sinh_unit(const std::function<double(double, double)>& f,
                      int levels) {
  // sigma(tau) = 1/(1 + e^{-pi sinh tau}); both sigma and 1-sigma stay
  // accurate down to the underflow threshold, and the trapezoid weight is
  // dsigma/dtau = (pi/2) cosh(tau) sigma (1-sigma).
  auto node_sum = [&](double h, int j_start, int j_step) {
    double local = 0.0;
    for (int j = j_start;; j += j_step) {
      double tau = h * j;
      double expo = M_PI * std::sinh(tau);
      if (expo > 700.0) break;  // node indistinguishable from the endpoint
      double sigma = 1.0 / (1.0 + std::exp(-expo));
      double one_minus = 1.0 / (1.0 + std::exp(expo));
      // dsigma/dtau = pi cosh(tau) sigma (1 - sigma)
      double weight = M_PI * std::cosh(tau) * sigma * one_minus;
      double term = (j == 0)
                        ? weight * f(sigma, one_minus)
                        : weight * (f(sigma, one_minus) + f(one_minus, sigma));
      local += term;
      if (j > j_start && std::abs(term) < 1e-300) break;
    }
    return local;
  };

  double h = 1.0;
  double integral = h * node_sum(h, 0, 1);
  for (int level = 1; level < levels; ++level) {
    h *= 0.5;
    double refined = 0.5 * integral + h * node_sum(h, 1, 2);
    if (level >= 4 && std::abs(refined - integral) <=
                          1e-13 * std::max(std::abs(refined), 1e-300))
      return refined;
    integral = refined;
  }
  return integral;
}

}  // namespace gmhd
