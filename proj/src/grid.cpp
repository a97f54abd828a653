#include "gmhd/grid.hpp"

#include <stdexcept>
#include <string>

namespace gmhd {

Grid::Grid(int dim, int points_per_axis) : dim_(dim), n_(points_per_axis) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("Grid: dim must be 2 or 3, got " +
                                std::to_string(dim));
  if (n_ < 8 || n_ % 2 != 0)
    throw std::invalid_argument(
        "Grid: points_per_axis must be even and >= 8, got " +
        std::to_string(n_));

  modes_ = 1;
  for (int d = 0; d < dim_; ++d) modes_ *= n_;

  axis_k_.resize(n_);
  for (int i = 0; i < n_; ++i) axis_k_[i] = (i < n_ / 2) ? i : i - n_;

  k_sq_.resize(modes_);
  conj_index_.resize(modes_);
  for (int flat = 0; flat < modes_; ++flat) {
    auto k = wavevector(flat);
    double s = 0.0;
    std::array<int, 3> neg{0, 0, 0};
    for (int d = 0; d < dim_; ++d) {
      s += double(k[d]) * double(k[d]);
      // -N/2 is its own partner: -(-N/2) = N/2 aliases back to -N/2
      neg[d] = (k[d] == -n_ / 2) ? k[d] : -k[d];
    }
    k_sq_[flat] = s;
    conj_index_[flat] = index_of(neg);
  }
}

int Grid::index_of(const std::array<int, 3>& k) const {
  int flat = 0;
  for (int d = 0; d < dim_; ++d) {
    int idx = k[d] >= 0 ? k[d] : k[d] + n_;
    flat = flat * n_ + idx;
  }
  return flat;
}

std::array<int, 3> Grid::wavevector(int flat) const {
  std::array<int, 3> k{0, 0, 0};
  for (int d = dim_ - 1; d >= 0; --d) {
    k[d] = axis_k_[flat % n_];
    flat /= n_;
  }
  return k;
}

}  // namespace gmhd
