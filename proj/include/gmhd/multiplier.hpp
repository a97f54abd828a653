#pragma once

#include <array>
#include <cmath>

#include "gmhd/gfunction.hpp"

namespace gmhd {

/// One generalized dissipation operator: the Fourier multiplier with symbol
/// -|k|^gamma / g(|k|). epsilon is the slack used wherever an estimate calls
/// for an exponent strictly below gamma; the solver itself never reads it.
struct MultiplierSpec {
  double gamma = 2.0;
  GFunction g{};
  double epsilon = 1e-9;

  double gamma_minus() const { return gamma - epsilon; }
};

/// Symbol value at radial wave number |k|: -|k|^gamma / g(|k|).
/// Non-positive everywhere, zero at the origin.
inline double symbol_eval(const MultiplierSpec& spec, double k_norm) {
  if (k_norm == 0.0) return 0.0;
  return -std::pow(k_norm, spec.gamma) / spec.g(k_norm);
}

inline double symbol_eval(const MultiplierSpec& spec,
                          const std::array<int, 3>& k) {
  double s = 0.0;
  for (int c : k) s += double(c) * double(c);
  return symbol_eval(spec, std::sqrt(s));
}

/// A triple (L1, L2, L3): velocity dissipation, magnetic diffusion, and the
/// operator defining the filtered velocity.
struct MultiplierSet {
  MultiplierSpec l1{};
  MultiplierSpec l2{};
  MultiplierSpec l3{};
};

}  // namespace gmhd
