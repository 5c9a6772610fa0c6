#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mild_detail.hpp"
#include "qg/mild.hpp"
#include "qg/norms.hpp"
#include "qg/transform.hpp"

namespace qg {
namespace {

double etnu_of_spectra(const std::vector<SpectralField>& values,
                       const std::vector<double>& times, double nu) {
  double best = 0.0;
  for (std::size_t m = 0; m < values.size(); ++m) {
    if (times[m] <= 0.0) continue;
    const SpectralVector u = riesz_perp(values[m]);
    const double value = linf_norm(transform_inverse(values[m])) +
                         linf_norm(transform_inverse(u.first)) +
                         linf_norm(transform_inverse(u.second));
    best = std::max(best, std::pow(times[m], nu) * value);
  }
  return best;
}

std::vector<SpectralField> subtract(const std::vector<SpectralField>& a,
                                    const std::vector<SpectralField>& b) {
  std::vector<SpectralField> out;
  out.reserve(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) out.push_back(a[m] - b[m]);
  return out;
}

std::vector<RealField> to_samples(const std::vector<SpectralField>& values) {
  std::vector<RealField> out;
  out.reserve(values.size());
  for (const SpectralField& f : values) out.push_back(transform_inverse(f));
  return out;
}

}  // namespace

std::vector<double> PicardResult::contraction_ratios() const {
  std::vector<double> ratios;
  for (std::size_t n = 1; n < diff_norms.size(); ++n) {
    ratios.push_back(diff_norms[n - 1] > 0.0 ? diff_norms[n] / diff_norms[n - 1] : 0.0);
  }
  return ratios;
}

PicardResult picard_iterate(const RealField& theta0, const SolverConfig& cfg,
                            const TimeGrid& tg, const PicardOptions& options) {
  if (!theta0.all_finite()) throw std::invalid_argument("picard_iterate: non-finite data");
  if (options.max_iter < 1) throw std::invalid_argument("picard_iterate: max_iter must be >= 1");
  const std::vector<double>& times = tg.nodes();
  const std::vector<double> symbol = detail::dissipation_symbol(theta0.grid(), cfg.alpha());
  const SpectralField data = transform_forward(theta0);

  std::vector<SpectralField> free;
  free.reserve(times.size());
  for (double t : times) free.push_back(semigroup_apply(data, cfg.alpha(), t));

  PicardResult result;
  if (options.calibration) options.calibration->validate();

  std::vector<SpectralField> current = free;
  std::vector<RealField> current_samples = to_samples(current);
  result.iterate_norms.push_back(etnu_of_spectra(current, times, cfg.nu()));
  if (options.calibration) {
    result.mu0_margin = result.iterate_norms.front() / options.calibration->mu0_empirical;
  }

  for (int iter = 0; iter < options.max_iter; ++iter) {
    std::vector<SpectralField> next =
        detail::bilinear_spectral(current_samples, current, times, symbol);
    for (std::size_t m = 0; m < next.size(); ++m) next[m] += free[m];
    const double diff = etnu_of_spectra(subtract(next, current), times, cfg.nu());
    current = std::move(next);
    current_samples = to_samples(current);
    result.diff_norms.push_back(diff);
    result.iterate_norms.push_back(etnu_of_spectra(current, times, cfg.nu()));
    if (!std::isfinite(diff)) {
      result.diverged = true;
      break;
    }
    if (diff <= options.tol) {
      result.converged = true;
      break;
    }
    const auto& d = result.diff_norms;
    const std::size_t k = d.size();
    if (k >= 4 && d[k - 1] > d[k - 2] && d[k - 2] > d[k - 3] && d[k - 3] > d[k - 4]) {
      result.diverged = true;
      break;
    }
  }

  if (options.compute_residual) {
    std::vector<SpectralField> image =
        detail::bilinear_spectral(current_samples, current, times, symbol);
    for (std::size_t m = 0; m < image.size(); ++m) image[m] += free[m];
    result.residual = etnu_of_spectra(subtract(current, image), times, cfg.nu());
  }

  Trajectory limit(tg.gamma());
  for (std::size_t m = 0; m < times.size(); ++m) {
    limit.append(times[m], std::move(current_samples[m]));
  }
  result.limit = std::move(limit);
  return result;
}

double observed_contraction(const RealField& theta0, const SolverConfig& cfg,
                            const TimeGrid& tg, int iterations) {
  const double phi0 = etnu_norm(free_evolution(theta0, cfg, tg), cfg);
  if (phi0 == 0.0) return 0.0;
  PicardOptions options;
  options.max_iter = iterations;
  options.tol = kContractionFloor * phi0;
  options.compute_residual = false;
  const PicardResult result = picard_iterate(theta0, cfg, tg, options);
  if (result.diverged) return kInfinity;
  const std::vector<double> ratios = result.contraction_ratios();
  return ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
}

}  // namespace qg
