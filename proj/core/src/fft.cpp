#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "qg/transform.hpp"

namespace qg::detail {
namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};
using PlanHandle = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// The FFTW planner is not re-entrant; execution through the new-array
// interface is.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second.get();
    std::vector<Complex> scratch(static_cast<std::size_t>(n) * n);
    auto* buffer = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_2d(n, n, buffer, buffer,
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fftw: planning failed");
    return plans_.emplace(key, PlanHandle(plan)).first->second.get();
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, PlanHandle> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void dft2d(std::span<Complex> data, int n, int sign) {
  if (data.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("dft2d: buffer size mismatch");
  }
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_cache().get(n, sign), buffer, buffer);
}

}  // namespace qg::detail

namespace qg {

SpectralField transform_forward(const RealField& f) {
  if (!f.all_finite()) {
    throw std::invalid_argument("transform_forward: field has non-finite samples");
  }
  const Grid2D& grid = f.grid();
  std::vector<Complex> data(grid.size());
  auto samples = f.samples();
  for (std::size_t k = 0; k < data.size(); ++k) data[k] = samples[k];
  detail::dft2d(data, grid.n(), -1);
  const double weight = grid.cell_area();
  const int n = grid.n();
  // Exact Hermitian symmetry, so filtered spectra holding only rounding noise
  // still pass the inverse-transform check.
  for (int i = 0; i < n; ++i) {
    const int ni = (n - i) % n;
    for (int j = 0; j < n; ++j) {
      const int nj = (n - j) % n;
      const std::size_t a = grid.flat(i, j);
      const std::size_t b = grid.flat(ni, nj);
      if (b < a) continue;
      if (a == b) {
        data[a] = Complex(data[a].real() * weight, 0.0);
      } else {
        const Complex average = 0.5 * weight * (data[a] + std::conj(data[b]));
        data[a] = average;
        data[b] = std::conj(average);
      }
    }
  }
  return SpectralField(grid, std::move(data));
}

RealField transform_inverse(const SpectralField& spectrum) {
  const double defect = spectrum.hermitian_defect();
  if (defect > kHermitianTolerance) {
    throw std::invalid_argument(
        "transform_inverse: Hermitian symmetry violated (relative defect " +
        std::to_string(defect) + ")");
  }
  const Grid2D& grid = spectrum.grid();
  auto coeffs = spectrum.coeffs();
  std::vector<Complex> data(coeffs.begin(), coeffs.end());
  detail::dft2d(data, grid.n(), +1);
  const double weight = 1.0 / (grid.period() * grid.period());
  std::vector<double> samples(grid.size());
  for (std::size_t k = 0; k < data.size(); ++k) samples[k] = data[k].real() * weight;
  return RealField(grid, std::move(samples));
}

}  // namespace qg
