#pragma once

#include <string>

#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Field snapshot file: "GMHD" magic, u32 version, u32 dim, u32 N,
/// u32 component count, binary64 time, then per component the row-major
/// interleaved complex binary64 coefficients. Native (little-endian) layout.
void write_snapshot(const std::string& path, const SpectralField& f,
                    double time);

struct Snapshot {
  SpectralField field;
  double time;
};

/// Reads a snapshot written by write_snapshot. Throws std::runtime_error on
/// bad magic, unsupported version, or truncated data.
Snapshot read_snapshot(const std::string& path);

}  // namespace gmhd
