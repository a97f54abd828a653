#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace gmhd {

/// Uniform discretization of the torus [0, 2pi)^dim with normalized
/// measure dx/(2pi)^dim. Wave vectors are integer tuples with each
/// component in [-N/2, N/2).
class Grid {
 public:
  Grid(int dim, int points_per_axis);

  int dim() const { return dim_; }
  int points_per_axis() const { return n_; }
  int modes() const { return modes_; }  // N^dim

  /// Wave number for a flat array index along one axis.
  int wavenumber(int axis_index) const { return axis_k_[axis_index]; }

  /// Flat array index of an integer wave vector (components in [-N/2, N/2)).
  int index_of(const std::array<int, 3>& k) const;

  /// Decode a flat index into the integer wave vector (unused axes are 0).
  std::array<int, 3> wavevector(int flat) const;

  /// Flat index of the Hermitian partner -k (component-wise mod N).
  int conjugate_index(int flat) const { return conj_index_[flat]; }

  double k_norm_sq(int flat) const { return k_sq_[flat]; }
  double k_norm(int flat) const { return std::sqrt(k_sq_[flat]); }

  /// Largest |k| representable on the grid: sqrt(dim) * N/2.
  double k_max() const { return std::sqrt(double(dim_)) * (n_ / 2); }

  bool operator==(const Grid& other) const {
    return dim_ == other.dim_ && n_ == other.n_;
  }

 private:
  int dim_;
  int n_;
  int modes_;
  std::vector<int> axis_k_;      // index -> wave number, one axis
  std::vector<double> k_sq_;     // flat index -> |k|^2
  std::vector<int> conj_index_;  // flat index -> index of -k
};

}  // namespace gmhd
