#include "qg/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "qg/transform.hpp"

namespace qg {
namespace {

template <typename Multiplier>
SpectralField apply_multiplier(const SpectralField& in, Multiplier&& multiplier) {
  const Grid2D& grid = in.grid();
  SpectralField out(grid);
  const int n = grid.n();
  for (int i = 0; i < n; ++i) {
    const double k1 = grid.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double k2 = grid.wavenumber(j);
      out(i, j) = multiplier(i, j, k1, k2) * in(i, j);
    }
  }
  return out;
}

void check_axis(int axis) {
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 or 1");
}

}  // namespace

SpectralField fractional_laplacian(const SpectralField& spectrum, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("fractional_laplacian: alpha must lie in (0, 1]");
  }
  return apply_multiplier(spectrum, [alpha](int, int, double k1, double k2) {
    const double k2sum = k1 * k1 + k2 * k2;
    return Complex(k2sum == 0.0 ? 0.0 : std::pow(k2sum, alpha));
  });
}

SpectralField semigroup_apply(const SpectralField& spectrum, double alpha, double t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("semigroup_apply: alpha must lie in (0, 1]");
  }
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup_apply: t must be >= 0");
  if (t == 0.0) return spectrum;
  return apply_multiplier(spectrum, [alpha, t](int, int, double k1, double k2) {
    return Complex(std::exp(-t * std::pow(k1 * k1 + k2 * k2, alpha)));
  });
}

SpectralField riesz(const SpectralField& spectrum, int axis) {
  check_axis(axis);
  const Grid2D& grid = spectrum.grid();
  return apply_multiplier(spectrum, [&grid, axis](int i, int j, double k1, double k2) {
    if (grid.is_nyquist(axis == 0 ? i : j)) return Complex{};
    const double norm = std::hypot(k1, k2);
    if (norm == 0.0) return Complex{};
    return Complex(0.0, -(axis == 0 ? k1 : k2) / norm);
  });
}

SpectralVector riesz_perp(const SpectralField& spectrum) {
  SpectralField first = riesz(spectrum, 1);
  first *= -1.0;
  return {std::move(first), riesz(spectrum, 0)};
}

SpectralField partial_derivative(const SpectralField& spectrum, int axis) {
  check_axis(axis);
  const Grid2D& grid = spectrum.grid();
  return apply_multiplier(spectrum, [&grid, axis](int i, int j, double k1, double k2) {
    if (grid.is_nyquist(axis == 0 ? i : j)) return Complex{};
    return Complex(0.0, axis == 0 ? k1 : k2);
  });
}

SpectralField divergence(const SpectralField& fx, const SpectralField& fy) {
  require_same_grid(fx.grid(), fy.grid(), "divergence");
  return partial_derivative(fx, 0) + partial_derivative(fy, 1);
}

SpectralField dealias(const SpectralField& spectrum) {
  const Grid2D& grid = spectrum.grid();
  const double cutoff = grid.dealias_cutoff();
  return apply_multiplier(spectrum, [&grid, cutoff](int i, int j, double, double) {
    const bool keep = std::abs(grid.mode(i)) <= cutoff && std::abs(grid.mode(j)) <= cutoff;
    return Complex(keep ? 1.0 : 0.0);
  });
}

SpectralVector transport_flux(const RealField& theta, const SpectralField& other) {
  require_same_grid(theta.grid(), other.grid(), "transport_flux");
  SpectralVector velocity = riesz_perp(other);
  RealField u1 = transform_inverse(velocity.first);
  RealField u2 = transform_inverse(velocity.second);
  return {dealias(transform_forward(multiply(theta, u1))),
          dealias(transform_forward(multiply(theta, u2)))};
}

SpectralField nonlinear_term(const SpectralField& theta_hat) {
  const RealField theta = transform_inverse(theta_hat);
  SpectralVector flux = transport_flux(theta, theta_hat);
  return divergence(flux.first, flux.second);
}

RealField nonlinear_term(const RealField& theta) {
  return transform_inverse(nonlinear_term(transform_forward(theta)));
}

}  // namespace qg
