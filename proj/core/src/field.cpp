#include "qg/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qg {

RealField::RealField(const Grid2D& grid)
    : grid_(grid), samples_(grid.size(), 0.0) {}

RealField::RealField(const Grid2D& grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw std::invalid_argument("RealField: sample count does not match grid");
  }
}

RealField RealField::from_function(
    const Grid2D& grid, const std::function<double(double, double)>& f) {
  RealField out(grid);
  for (int i = 0; i < grid.n(); ++i) {
    for (int j = 0; j < grid.n(); ++j) {
      out(i, j) = f(grid.coordinate(i), grid.coordinate(j));
    }
  }
  return out;
}

bool RealField::all_finite() const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](double v) { return std::isfinite(v); });
}

RealField& RealField::operator+=(const RealField& other) {
  require_same_grid(grid_, other.grid_, "RealField +=");
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] += other.samples_[k];
  return *this;
}

RealField& RealField::operator-=(const RealField& other) {
  require_same_grid(grid_, other.grid_, "RealField -=");
  for (std::size_t k = 0; k < samples_.size(); ++k) samples_[k] -= other.samples_[k];
  return *this;
}

RealField& RealField::operator*=(double factor) {
  for (double& v : samples_) v *= factor;
  return *this;
}

RealField operator+(RealField a, const RealField& b) { return a += b; }
RealField operator-(RealField a, const RealField& b) { return a -= b; }
RealField operator*(double factor, RealField a) { return a *= factor; }

RealField multiply(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "multiply");
  RealField out(a.grid());
  auto lhs = a.samples();
  auto rhs = b.samples();
  auto dst = out.samples();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = lhs[k] * rhs[k];
  return out;
}

SpectralField::SpectralField(const Grid2D& grid)
    : grid_(grid), coeffs_(grid.size(), Complex{}) {}

SpectralField::SpectralField(const Grid2D& grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.size()) {
    throw std::invalid_argument("SpectralField: coefficient count does not match grid");
  }
}

Complex& SpectralField::at_mode(int m1, int m2) {
  return (*this)(grid_.index_of(m1), grid_.index_of(m2));
}

Complex SpectralField::at_mode(int m1, int m2) const {
  return (*this)(grid_.index_of(m1), grid_.index_of(m2));
}

double SpectralField::max_abs() const {
  double best = 0.0;
  for (const Complex& c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

double SpectralField::hermitian_defect() const {
  const int n = grid_.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const int ni = (n - i) % n;
    for (int j = 0; j < n; ++j) {
      const int nj = (n - j) % n;
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(ni, nj))));
    }
  }
  const double scale = max_abs();
  return scale > 0.0 ? worst / scale : 0.0;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField +=");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(grid_, other.grid_, "SpectralField -=");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

SpectralField& SpectralField::operator*=(Complex factor) {
  for (Complex& c : coeffs_) c *= factor;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(Complex factor, SpectralField a) { return a *= factor; }

double lp_norm(const RealField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) return linf_norm(f);
  double sum = 0.0;
  for (double v : f.samples()) sum += std::pow(std::abs(v), p);
  return std::pow(sum * f.grid().cell_area(), 1.0 / p);
}

double linf_norm(const RealField& f) {
  double best = 0.0;
  for (double v : f.samples()) best = std::max(best, std::abs(v));
  return best;
}

double mean(const RealField& f) {
  double sum = 0.0;
  for (double v : f.samples()) sum += v;
  return sum / static_cast<double>(f.samples().size());
}

double max_distance(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "max_distance");
  double best = 0.0;
  auto x = a.samples();
  auto y = b.samples();
  for (std::size_t k = 0; k < x.size(); ++k) best = std::max(best, std::abs(x[k] - y[k]));
  return best;
}

}  // namespace qg
