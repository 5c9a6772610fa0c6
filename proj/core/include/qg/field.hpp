#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "qg/grid.hpp"

namespace qg {

using Complex = std::complex<double>;

/// Lebesgue exponent; use kInfinity for the sup norm.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Scalar field sampled on the lattice, row-major with x1 as the row index.
class RealField {
 public:
  explicit RealField(const Grid2D& grid);
  RealField(const Grid2D& grid, std::vector<double> samples);

  /// Samples f(x1, x2) at every lattice point.
  static RealField from_function(const Grid2D& grid,
                                 const std::function<double(double, double)>& f);

  const Grid2D& grid() const { return grid_; }
  std::span<double> samples() { return samples_; }
  std::span<const double> samples() const { return samples_; }

  double& operator()(int i, int j) { return samples_[grid_.flat(i, j)]; }
  double operator()(int i, int j) const { return samples_[grid_.flat(i, j)]; }

  bool all_finite() const;

  RealField& operator+=(const RealField& other);
  RealField& operator-=(const RealField& other);
  RealField& operator*=(double factor);

 private:
  Grid2D grid_;
  std::vector<double> samples_;
};

RealField operator+(RealField a, const RealField& b);
RealField operator-(RealField a, const RealField& b);
RealField operator*(double factor, RealField a);
/// Pointwise product.
RealField multiply(const RealField& a, const RealField& b);

/// Fourier coefficients with the unnormalized integral convention
/// F(m) = sum_x f(x) exp(-i k(m).x) (L/n)^2, stored in FFT index order.
class SpectralField {
 public:
  explicit SpectralField(const Grid2D& grid);
  SpectralField(const Grid2D& grid, std::vector<Complex> coeffs);

  const Grid2D& grid() const { return grid_; }
  std::span<Complex> coeffs() { return coeffs_; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Access by FFT index pair.
  Complex& operator()(int i, int j) { return coeffs_[grid_.flat(i, j)]; }
  Complex operator()(int i, int j) const { return coeffs_[grid_.flat(i, j)]; }

  /// Access by signed mode pair, m in [-n/2, n/2).
  Complex& at_mode(int m1, int m2);
  Complex at_mode(int m1, int m2) const;

  /// Largest |F(m) - conj(F(-m))| relative to max |F|; 0 for the zero field.
  double hermitian_defect() const;
  double max_abs() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(Complex factor);

 private:
  Grid2D grid_;
  std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(Complex factor, SpectralField a);

/// Unnormalized L^p norm: (sum |f|^p (L/n)^2)^(1/p); p = kInfinity is the max.
double lp_norm(const RealField& f, double p);
double linf_norm(const RealField& f);
/// Spatial average of the samples.
double mean(const RealField& f);
/// Max |a - b| over samples.
double max_distance(const RealField& a, const RealField& b);

}  // namespace qg
