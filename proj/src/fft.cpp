#include "gmhd/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace gmhd::fft {

namespace {

// Plans are cached per (dim, N, sign) and executed on caller arrays via the
// new-array interface. FFTW_ESTIMATE keeps planning deterministic across
// runs; FFTW_UNALIGNED lets one plan serve arbitrarily aligned buffers.
// Plan creation is not thread-safe; execution on distinct arrays is.
class PlanCache {
 public:
  fftw_plan get(const Grid& grid, int sign) {
    std::scoped_lock lock(mutex_);
    Key key{grid.dim(), grid.points_per_axis(), sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::vector<std::complex<double>> scratch(grid.modes());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    int n = grid.points_per_axis();
    fftw_plan plan;
    if (grid.dim() == 2)
      plan = fftw_plan_dft_2d(n, n, buf, buf, sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    else
      plan = fftw_plan_dft_3d(n, n, n, buf, buf, sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  using Key = std::tuple<int, int, int>;
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void forward(const Grid& grid, std::complex<double>* data) {
  fftw_plan plan = cache().get(grid, FFTW_FORWARD);
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, buf, buf);
  double scale = 1.0 / double(grid.modes());
  for (int i = 0; i < grid.modes(); ++i) data[i] *= scale;
}

void inverse(const Grid& grid, std::complex<double>* data) {
  fftw_plan plan = cache().get(grid, FFTW_BACKWARD);
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace gmhd::fft
