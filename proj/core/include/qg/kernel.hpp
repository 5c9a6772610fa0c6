#pragma once

#include "qg/field.hpp"

namespace qg {

/// Samples of the kernel K_t of exp(-t (-Delta)^alpha) on the grid, i.e. the
/// inverse transform of exp(-t |k|^(2 alpha)). K_t has unit mass.
RealField semigroup_kernel(double alpha, double t, const Grid2D& grid);

/// ||K_t||_r with the unnormalized integral convention. The result is only
/// meaningful when kernel_resolved(alpha, t, grid) holds.
double kernel_norm(double alpha, double t, double r, const Grid2D& grid);

/// Accuracy contract for kernel_norm: L >= 16 t^(1/(2 alpha)) and
/// exp(-t (pi n / L)^(2 alpha)) < 1e-12.
bool kernel_resolved(double alpha, double t, const Grid2D& grid);

/// Smallest grid satisfying kernel_resolved for every t in [t_min, t_max]
/// on a common period.
Grid2D kernel_grid(double alpha, double t_min, double t_max);

/// sigma_r = (1/alpha)(1/r - 1).
double kernel_exponent(double alpha, double r);

}  // namespace qg
