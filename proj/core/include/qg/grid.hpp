#pragma once

#include <cstddef>
#include <numbers>

namespace qg {

/// Periodic square domain [0, L)^2 sampled on an n x n lattice.
///
/// Sample (i, j) sits at x = (i L/n, j L/n); the first index runs along x1.
/// Fourier index i maps to the integer mode m = i for i < n/2 and i - n
/// otherwise, with wavenumber k = (2 pi / L) m.
class Grid2D {
 public:
  explicit Grid2D(int n, double period = 2.0 * std::numbers::pi,
                  double dealias_fraction = 2.0 / 3.0);

  int n() const { return n_; }
  double period() const { return period_; }
  double dealias_fraction() const { return dealias_fraction_; }

  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }
  double spacing() const { return period_ / n_; }
  double cell_area() const { return spacing() * spacing(); }
  double fundamental() const { return 2.0 * std::numbers::pi / period_; }

  int mode(int index) const { return index < n_ / 2 ? index : index - n_; }
  int index_of(int mode) const { return mode >= 0 ? mode : mode + n_; }
  double wavenumber(int index) const { return fundamental() * mode(index); }
  double coordinate(int index) const { return index * spacing(); }

  /// Largest |m_j| kept by the quadratic dealiasing mask.
  double dealias_cutoff() const { return dealias_fraction_ * n_ / 2.0; }
  bool is_nyquist(int index) const { return index == n_ / 2; }

  std::size_t flat(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  int n_;
  double period_;
  double dealias_fraction_;
};

/// Throws std::invalid_argument naming `what` when the grids differ.
void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what);

/// Dissipation exponent and the derived critical indices.
class SolverConfig {
 public:
  explicit SolverConfig(double alpha);

  double alpha() const { return alpha_; }
  /// nu = 1 - 1/(2 alpha), the time weight of the solution norm.
  double nu() const { return 1.0 - 1.0 / (2.0 * alpha_); }
  /// p_c = 2/(2 alpha - 1).
  double p_c() const { return 2.0 / (2.0 * alpha_ - 1.0); }
  /// s_c = 2 - 2 alpha.
  double s_c() const { return 2.0 - 2.0 * alpha_; }

 private:
  double alpha_;
};

}  // namespace qg
