#include <cmath>
#include <stdexcept>
#include <string>

#include "mild_detail.hpp"
#include "qg/mild.hpp"
#include "qg/transform.hpp"

namespace qg {
namespace detail {

std::vector<double> dissipation_symbol(const Grid2D& grid, double alpha) {
  std::vector<double> symbol(grid.size());
  for (int i = 0; i < grid.n(); ++i) {
    const double k1 = grid.wavenumber(i);
    for (int j = 0; j < grid.n(); ++j) {
      const double k2 = grid.wavenumber(j);
      const double k_sq = k1 * k1 + k2 * k2;
      symbol[grid.flat(i, j)] = k_sq == 0.0 ? 0.0 : std::pow(k_sq, alpha);
    }
  }
  return symbol;
}

std::vector<SpectralField> duhamel_spectral(const std::vector<SpectralField>& source,
                                            const std::vector<double>& times,
                                            const std::vector<double>& symbol) {
  if (source.size() != times.size() || source.empty()) {
    throw std::invalid_argument("duhamel: source and time grid sizes differ");
  }
  const Grid2D& grid = source.front().grid();
  std::vector<SpectralField> out;
  out.reserve(times.size());
  out.emplace_back(grid);
  for (std::size_t m = 1; m < times.size(); ++m) {
    const double h = times[m] - times[m - 1];
    SpectralField next(grid);
    auto dst = next.coeffs();
    auto prev = out.back().coeffs();
    auto g_old = source[m - 1].coeffs();
    auto g_new = source[m].coeffs();
    for (std::size_t k = 0; k < dst.size(); ++k) {
      // With tau = t_m - s the integrand is exp(-a tau) [g_new (1 - tau/h) + g_old tau/h].
      const double z = symbol[k] * h;
      const double full = h * phi1(z);
      const double ramp = h * ramp_weight(z);
      dst[k] = std::exp(-z) * prev[k] + (full - ramp) * g_new[k] + ramp * g_old[k];
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<SpectralField> bilinear_spectral(const std::vector<RealField>& theta1,
                                             const std::vector<SpectralField>& theta2,
                                             const std::vector<double>& times,
                                             const std::vector<double>& symbol) {
  if (theta1.size() != times.size() || theta2.size() != times.size()) {
    throw std::invalid_argument("bilinear_B: trajectory lengths differ");
  }
  std::vector<SpectralField> source;
  source.reserve(times.size());
  for (std::size_t m = 0; m < times.size(); ++m) {
    SpectralVector flux = transport_flux(theta1[m], theta2[m]);
    source.push_back(divergence(flux.first, flux.second));
  }
  std::vector<SpectralField> out = duhamel_spectral(source, times, symbol);
  for (SpectralField& f : out) f *= -1.0;
  return out;
}

void require_matching_nodes(const std::vector<double>& times,
                            const std::vector<double>& nodes, const char* what) {
  bool ok = times.size() == nodes.size();
  for (std::size_t m = 0; ok && m < times.size(); ++m) {
    ok = std::abs(times[m] - nodes[m]) <= 1e-12 * (1.0 + std::abs(nodes[m]));
  }
  if (!ok) throw std::invalid_argument(std::string(what) + ": time grid mismatch");
}

}  // namespace detail

Trajectory duhamel_linear(const VectorTrajectory& forcing, const SolverConfig& cfg,
                          const TimeGrid& tg) {
  detail::require_matching_nodes(forcing.times(), tg.nodes(), "duhamel_linear");
  const Grid2D& grid = forcing.grid();
  std::vector<SpectralField> source;
  source.reserve(forcing.size());
  for (std::size_t m = 0; m < forcing.size(); ++m) {
    source.push_back(divergence(transform_forward(forcing.first(m)),
                                transform_forward(forcing.second(m))));
  }
  const auto values = detail::duhamel_spectral(source, tg.nodes(),
                                               detail::dissipation_symbol(grid, cfg.alpha()));
  Trajectory out(tg.gamma());
  for (std::size_t m = 0; m < values.size(); ++m) {
    out.append(tg.nodes()[m], transform_inverse(values[m]));
  }
  return out;
}

Trajectory bilinear_B(const Trajectory& theta1, const Trajectory& theta2,
                      const SolverConfig& cfg, const TimeGrid& tg) {
  detail::require_matching_nodes(theta1.times(), tg.nodes(), "bilinear_B");
  detail::require_matching_nodes(theta2.times(), tg.nodes(), "bilinear_B");
  require_same_grid(theta1.grid(), theta2.grid(), "bilinear_B");
  std::vector<SpectralField> second;
  second.reserve(theta2.size());
  for (const RealField& f : theta2.fields()) second.push_back(transform_forward(f));
  const auto values = detail::bilinear_spectral(
      theta1.fields(), second, tg.nodes(), detail::dissipation_symbol(theta1.grid(), cfg.alpha()));
  Trajectory out(tg.gamma());
  for (std::size_t m = 0; m < values.size(); ++m) {
    out.append(tg.nodes()[m], transform_inverse(values[m]));
  }
  return out;
}

Trajectory free_evolution(const RealField& theta0, const SolverConfig& cfg,
                          const TimeGrid& tg) {
  const SpectralField spectrum = transform_forward(theta0);
  Trajectory out(tg.gamma());
  for (double t : tg.nodes()) {
    out.append(t, t == 0.0 ? theta0 : transform_inverse(semigroup_apply(spectrum, cfg.alpha(), t)));
  }
  return out;
}

}  // namespace qg
