#include "qg/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qg/operators.hpp"
#include "qg/transform.hpp"

namespace qg {

RealField semigroup_kernel(double alpha, double t, const Grid2D& grid) {
  if (!(t > 0.0)) throw std::invalid_argument("semigroup_kernel: t must be > 0");
  SpectralField unit(grid);
  for (Complex& c : unit.coeffs()) c = 1.0;
  return transform_inverse(semigroup_apply(unit, alpha, t));
}

double kernel_norm(double alpha, double t, double r, const Grid2D& grid) {
  if (!(t > 0.0)) throw std::invalid_argument("kernel_norm: t must be > 0");
  return lp_norm(semigroup_kernel(alpha, t, grid), r);
}

bool kernel_resolved(double alpha, double t, const Grid2D& grid) {
  const double decay_length = std::pow(t, 1.0 / (2.0 * alpha));
  const double k_nyquist = std::numbers::pi * grid.n() / grid.period();
  return grid.period() >= 16.0 * decay_length &&
         std::exp(-t * std::pow(k_nyquist, 2.0 * alpha)) < 1e-12;
}

Grid2D kernel_grid(double alpha, double t_min, double t_max) {
  if (!(t_min > 0.0 && t_max >= t_min)) {
    throw std::invalid_argument("kernel_grid: need 0 < t_min <= t_max");
  }
  const double period = 16.0 * std::pow(t_max, 1.0 / (2.0 * alpha));
  // exp(-t k^(2a)) < 1e-12  <=>  k > (ln(1e12)/t)^(1/(2a))
  const double k_needed = std::pow(std::log(1e12) / t_min, 1.0 / (2.0 * alpha));
  int n = 8;
  while (std::numbers::pi * n / period <= k_needed) {
    n *= 2;
    if (n > (1 << 14)) throw std::invalid_argument("kernel_grid: time range too wide");
  }
  return Grid2D(n, period);
}

double kernel_exponent(double alpha, double r) {
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  return (inv_r - 1.0) / alpha;
}

}  // namespace qg
