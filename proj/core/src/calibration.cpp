#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qg/mild.hpp"
#include "qg/norms.hpp"

namespace qg {

void CalibrationRecord::validate() const {
  if (!(mu0_empirical > 0.0) || !std::isfinite(mu0_empirical)) {
    throw std::invalid_argument("CalibrationRecord: mu0_empirical must be positive");
  }
}

SmallnessReport smallness_check(const RealField& theta0, const SolverConfig& cfg,
                                const TimeGrid& tg, const CalibrationRecord& calib) {
  calib.validate();
  const std::vector<double> profile = etnu_profile(free_evolution(theta0, cfg, tg), cfg);
  std::vector<double> running(profile.size());
  double best = 0.0;
  for (std::size_t m = 0; m < profile.size(); ++m) {
    best = std::max(best, profile[m]);
    running[m] = best;
  }
  SmallnessReport report;
  report.phi0_norm = running.back();
  report.margin = report.phi0_norm / calib.mu0_empirical;
  report.exceeded = report.margin > 1.0;
  if (report.exceeded) {
    // running is nondecreasing, so the admissible prefix is found by bisection.
    const auto first_bad = std::upper_bound(running.begin(), running.end(), calib.mu0_empirical);
    const auto index = static_cast<std::size_t>(first_bad - running.begin());
    report.safe_horizon = index == 0 ? 0.0 : tg.nodes()[index - 1];
    report.next_node_margin = running[index] / calib.mu0_empirical;
  }
  return report;
}

CalibrationRecord calibrate_mu0(const CalibrationSpec& spec) {
  if (spec.seeds.empty()) throw std::invalid_argument("calibrate_mu0: empty seed family");
  const SolverConfig cfg(spec.alpha);
  const Grid2D grid(spec.n, spec.period);
  const TimeGrid tg(spec.horizon, spec.intervals, spec.gamma);

  auto data = [&](std::uint64_t seed, double amplitude) {
    return random_bandlimited(grid, {seed, spec.k_min, spec.k_max, amplitude});
  };
  auto worst_ratio = [&](double amplitude) {
    double worst = 0.0;
    for (std::uint64_t seed : spec.seeds) {
      worst = std::max(worst, observed_contraction(data(seed, amplitude), cfg, tg,
                                                   spec.probe_iterations));
    }
    return worst;
  };

  double lo = 0.0;
  double hi = spec.initial_amplitude;
  for (int expand = 0; expand < 30 && worst_ratio(hi) <= 0.5; ++expand) {
    lo = hi;
    hi *= 2.0;
  }
  for (int step = 0; step < spec.bisection_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (worst_ratio(mid) <= 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!(lo > 0.0)) {
    throw std::runtime_error("calibrate_mu0: no passing amplitude found; lower initial_amplitude");
  }

  CalibrationRecord record;
  record.alpha = spec.alpha;
  record.amplitude = lo;
  record.max_contraction = worst_ratio(lo);
  record.n = spec.n;
  record.period = spec.period;
  record.horizon = spec.horizon;
  record.intervals = spec.intervals;
  record.gamma = spec.gamma;
  record.mu0_empirical = kInfinity;
  for (std::uint64_t seed : spec.seeds) {
    const double norm = etnu_norm(free_evolution(data(seed, lo), cfg, tg), cfg);
    record.mu0_empirical = std::min(record.mu0_empirical, norm);
  }
  return record;
}

}  // namespace qg
