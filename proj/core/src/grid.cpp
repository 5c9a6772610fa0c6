#include "qg/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qg {

Grid2D::Grid2D(int n, double period, double dealias_fraction)
    : n_(n), period_(period), dealias_fraction_(dealias_fraction) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("Grid2D: n must be a power of two >= 8, got " +
                                std::to_string(n));
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("Grid2D: period must be positive and finite");
  }
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0)) {
    throw std::invalid_argument("Grid2D: dealias_fraction must lie in (0, 1]");
  }
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": grid mismatch");
  }
}

SolverConfig::SolverConfig(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.5 && alpha < 1.0)) {
    throw std::invalid_argument(
        "SolverConfig: alpha must lie in the subcritical range (1/2, 1), got " +
        std::to_string(alpha));
  }
}

}  // namespace qg
