#include <cmath>
#include <stdexcept>
#include <string>

#include "mild_detail.hpp"
#include "qg/mild.hpp"
#include "qg/transform.hpp"

namespace qg {
namespace {

bool finite_spectrum(const SpectralField& f) {
  for (const Complex& c : f.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

SpectralField checked_forcing(const SpectralField& theta, int step) {
  try {
    return nonlinear_term(theta);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("evolve_etd: non-finite nonlinear term at step " +
                             std::to_string(step));
  }
}

}  // namespace

Trajectory evolve_etd(const RealField& theta0, const SolverConfig& cfg, double dt,
                      int n_steps, const EtdOptions& options) {
  if (!(dt > 0.0)) throw std::invalid_argument("evolve_etd: dt must be > 0");
  if (n_steps < 0) throw std::invalid_argument("evolve_etd: n_steps must be >= 0");
  if (options.record_every < 1) {
    throw std::invalid_argument("evolve_etd: record_every must be >= 1");
  }
  if (!theta0.all_finite()) throw std::invalid_argument("evolve_etd: non-finite data");

  const Grid2D& grid = theta0.grid();
  const std::vector<double> symbol = detail::dissipation_symbol(grid, cfg.alpha());
  std::vector<double> decay(grid.size());
  std::vector<double> stage(grid.size());
  std::vector<double> correction(grid.size());
  for (std::size_t k = 0; k < symbol.size(); ++k) {
    const double z = symbol[k] * dt;
    decay[k] = std::exp(-z);
    stage[k] = dt * phi1(z);
    correction[k] = dt * phi2(z);
  }

  SpectralField theta = transform_forward(theta0);
  Trajectory out(1.0);
  out.append(0.0, theta0);
  for (int step = 1; step <= n_steps; ++step) {
    const SpectralField forcing = checked_forcing(theta, step);
    SpectralField predictor(grid);
    {
      auto dst = predictor.coeffs();
      auto src = theta.coeffs();
      auto f0 = forcing.coeffs();
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = decay[k] * src[k] - stage[k] * f0[k];
    }
    if (!finite_spectrum(predictor)) {
      throw std::runtime_error("evolve_etd: non-finite state at step " + std::to_string(step));
    }
    const SpectralField forcing_pred = checked_forcing(predictor, step);
    {
      auto dst = theta.coeffs();
      auto a = predictor.coeffs();
      auto f0 = forcing.coeffs();
      auto fa = forcing_pred.coeffs();
      for (std::size_t k = 0; k < dst.size(); ++k) {
        dst[k] = a[k] - correction[k] * (fa[k] - f0[k]);
      }
    }
    if (!finite_spectrum(theta)) {
      throw std::runtime_error("evolve_etd: non-finite state at step " + std::to_string(step));
    }
    const double t = step * dt;
    if (options.observer) options.observer(step, t, theta);
    if (step % options.record_every == 0 || step == n_steps) {
      out.append(t, transform_inverse(theta));
    }
  }
  return out;
}

}  // namespace qg
