#include "gmhd/spectral_field.hpp"

#include <cmath>
#include <stdexcept>

namespace gmhd {

SpectralField::SpectralField(const Grid& grid, int components) : grid_(grid) {
  int ncomp = components < 0 ? grid.dim() : components;
  if (ncomp < 1) throw std::invalid_argument("SpectralField: components < 1");
  data_.assign(ncomp, std::vector<Complex>(grid.modes(), Complex{0.0, 0.0}));
}

void SpectralField::symmetrize() {
  for (auto& comp : data_) {
    for (int flat = 0; flat < grid_.modes(); ++flat) {
      int partner = grid_.conjugate_index(flat);
      if (partner < flat) continue;  // each pair handled once
      Complex a = comp[flat];
      Complex b = comp[partner];
      Complex sym = 0.5 * (a + std::conj(b));
      comp[flat] = sym;
      comp[partner] = std::conj(sym);
    }
  }
}

double SpectralField::hermitian_residual() const {
  double worst = 0.0;
  for (const auto& comp : data_) {
    for (int flat = 0; flat < grid_.modes(); ++flat) {
      Complex diff = comp[flat] - std::conj(comp[grid_.conjugate_index(flat)]);
      worst = std::max(worst, std::abs(diff));
    }
  }
  return worst;
}

double SpectralField::divergence_residual() const {
  if (components() != grid_.dim())
    throw std::logic_error(
        "divergence_residual: field is not a full vector field");
  double worst = 0.0;
  for (int flat = 0; flat < grid_.modes(); ++flat) {
    auto k = grid_.wavevector(flat);
    Complex dot{0.0, 0.0};
    double mag_sq = 0.0;
    for (int c = 0; c < components(); ++c) {
      dot += double(k[c]) * data_[c][flat];
      mag_sq += std::norm(data_[c][flat]);
    }
    if (mag_sq == 0.0) continue;
    worst = std::max(worst, std::abs(dot) / std::sqrt(mag_sq));
  }
  return worst;
}

double SpectralField::l2_norm() const {
  double sum = 0.0;
  for (const auto& comp : data_)
    for (const Complex& c : comp) sum += std::norm(c);
  return std::sqrt(sum);
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  if (!same_shape(other)) throw std::invalid_argument("field shape mismatch");
  for (int c = 0; c < components(); ++c)
    for (int i = 0; i < grid_.modes(); ++i) data_[c][i] += other.data_[c][i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  if (!same_shape(other)) throw std::invalid_argument("field shape mismatch");
  for (int c = 0; c < components(); ++c)
    for (int i = 0; i < grid_.modes(); ++i) data_[c][i] -= other.data_[c][i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& comp : data_)
    for (Complex& c : comp) c *= s;
  return *this;
}

void SpectralField::axpy(double s, const SpectralField& other) {
  if (!same_shape(other)) throw std::invalid_argument("field shape mismatch");
  for (int c = 0; c < components(); ++c)
    for (int i = 0; i < grid_.modes(); ++i)
      data_[c][i] += s * other.data_[c][i];
}

SpectralField operator+(SpectralField a, const SpectralField& b) {
  a += b;
  return a;
}

SpectralField operator-(SpectralField a, const SpectralField& b) {
  a -= b;
  return a;
}

SpectralField operator*(double s, SpectralField f) {
  f *= s;
  return f;
}

double inner_product_l2(const SpectralField& a, const SpectralField& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("field shape mismatch");
  double sum = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    const auto& ac = a.component(c);
    const auto& bc = b.component(c);
    for (size_t i = 0; i < ac.size(); ++i)
      sum += ac[i].real() * bc[i].real() + ac[i].imag() * bc[i].imag();
  }
  return sum;
}

}  // namespace gmhd
