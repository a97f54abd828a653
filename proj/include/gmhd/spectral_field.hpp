#pragma once

#include <complex>
#include <vector>

#include "gmhd/grid.hpp"

namespace gmhd {

/// A vector field on the torus stored as complex Fourier coefficients, one
/// array per Cartesian component. Real-valued physical fields correspond to
/// Hermitian-symmetric coefficients: coef(-k) = conj(coef(k)).
class SpectralField {
 public:
  using Complex = std::complex<double>;

  /// Zero field. components defaults to grid.dim() (one per space direction);
  /// scalar working fields use components = 1.
  explicit SpectralField(const Grid& grid, int components = -1);

  const Grid& grid() const { return grid_; }
  int components() const { return int(data_.size()); }

  std::vector<Complex>& component(int c) { return data_[c]; }
  const std::vector<Complex>& component(int c) const { return data_[c]; }

  Complex& coef(int c, int flat) { return data_[c][flat]; }
  const Complex& coef(int c, int flat) const { return data_[c][flat]; }

  Complex mode(int c, const std::array<int, 3>& k) const {
    return data_[c][grid_.index_of(k)];
  }
  void set_mode(int c, const std::array<int, 3>& k, Complex v) {
    data_[c][grid_.index_of(k)] = v;
  }

  /// Project onto Hermitian-symmetric coefficients (the nearest real field):
  /// coef(k) <- (coef(k) + conj(coef(-k))) / 2.
  void symmetrize();

  /// Max deviation |coef(k) - conj(coef(-k))| over all modes and components.
  double hermitian_residual() const;

  /// Max over modes k with nonzero coefficient of |sum_j k_j c_j(k)| / |c(k)|.
  /// Requires components() == grid().dim().
  double divergence_residual() const;

  /// Plancherel l2 norm: sqrt(sum over modes and components of |c|^2).
  double l2_norm() const;

  bool same_shape(const SpectralField& other) const {
    return grid_ == other.grid_ && components() == other.components();
  }

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);

  /// this += s * other
  void axpy(double s, const SpectralField& other);

 private:
  Grid grid_;
  std::vector<std::vector<Complex>> data_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField f);

/// L2 inner product <a, b> = Re sum_k sum_c a_c(k) conj(b_c(k)).
double inner_product_l2(const SpectralField& a, const SpectralField& b);

}  // namespace gmhd
