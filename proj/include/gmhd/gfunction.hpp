#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmhd {

/// Damping functions for the generalized dissipation symbols. All families
/// are non-decreasing and bounded below by 1 on [0, inf).
enum class GFamily { unit, log, loglog };

struct GFunction {
  GFamily family = GFamily::unit;

  double operator()(double s) const {
    switch (family) {
      case GFamily::unit:
        return 1.0;
      case GFamily::log:
        return std::log(M_E + s);
      case GFamily::loglog:
        return std::log(M_E + std::log(M_E + s));
    }
    return 1.0;
  }

  const char* name() const {
    switch (family) {
      case GFamily::unit:
        return "unit";
      case GFamily::log:
        return "log";
      case GFamily::loglog:
        return "loglog";
    }
    return "unit";
  }

  static GFunction parse(const std::string& name) {
    if (name == "unit") return {GFamily::unit};
    if (name == "log") return {GFamily::log};
    if (name == "loglog") return {GFamily::loglog};
    throw std::invalid_argument("unknown damping function family: " + name);
  }
};

}  // namespace gmhd
