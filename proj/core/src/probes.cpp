#include "qg/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qg/kernel.hpp"
#include "qg/mild.hpp"
#include "qg/operators.hpp"
#include "qg/special.hpp"
#include "qg/transform.hpp"

namespace qg {
namespace {

double relative_deviation(double measured, double expected) {
  const double gap = std::abs(measured - expected);
  return expected == 0.0 ? gap : gap / std::abs(expected);
}

void finish_slope_report(ProbeReport& report, const std::vector<double>& x,
                         const std::vector<double>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) report.series.emplace_back(x[i], y[i]);
  const bool degenerate = std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; });
  if (degenerate) {
    report.skipped = true;
    report.measured = 0.0;
    report.deviation = 0.0;
    report.pass = true;
    report.notes = "degenerate data: every ratio is zero";
    return;
  }
  report.measured = fit_power_law(x, y).slope;
  report.deviation = relative_deviation(report.measured, report.expected);
  report.pass = report.deviation <= report.tolerance;
}

Trajectory constant_trajectory(const RealField& field, const TimeGrid& tg) {
  Trajectory out(tg.gamma());
  for (double t : tg.nodes()) out.append(t, field);
  return out;
}

// (int_0^T g(t)^q dt)^(1/q) by the trapezoid rule on the trajectory nodes.
double time_lq(const std::vector<double>& times, const std::vector<double>& values, double q) {
  double sum = 0.0;
  for (std::size_t m = 1; m < times.size(); ++m) {
    sum += 0.5 * (times[m] - times[m - 1]) *
           (std::pow(values[m], q) + std::pow(values[m - 1], q));
  }
  return std::pow(sum, 1.0 / q);
}

std::vector<double> node_norms(const Trajectory& traj, double p) {
  std::vector<double> out;
  for (const RealField& f : traj.fields()) out.push_back(lp_norm(f, p));
  return out;
}

}  // namespace

void write_probe_csv(std::ostream& out, const std::vector<ProbeReport>& reports) {
  out << "name,expected,measured,deviation,tolerance,pass,skipped,config\n";
  for (const ProbeReport& r : reports) {
    out << r.name << ',' << format_number(r.expected) << ',' << format_number(r.measured) << ','
        << format_number(r.deviation) << ',' << format_number(r.tolerance) << ','
        << (r.pass ? 1 : 0) << ',' << (r.skipped ? 1 : 0) << ",\"" << r.config << "\"\n";
  }
}

void write_probe_summary(std::ostream& out, const std::vector<ProbeReport>& reports) {
  for (const ProbeReport& r : reports) {
    out << (r.skipped ? "[SKIP] " : r.pass ? "[PASS] " : "[FAIL] ") << r.name
        << "  expected=" << format_number(r.expected)
        << "  measured=" << format_number(r.measured)
        << "  deviation=" << format_number(r.deviation)
        << "  tolerance=" << format_number(r.tolerance);
    if (!r.config.empty()) out << "  (" << r.config << ")";
    if (!r.notes.empty()) out << "\n       " << r.notes;
    out << '\n';
  }
}

ProbeReport max_principle_report(const Trajectory& traj) {
  if (traj.empty()) throw std::invalid_argument("max_principle_report: empty trajectory");
  ProbeReport report;
  report.name = "max-principle";
  report.expected = 1.0;
  report.tolerance = 1e-8;
  const std::vector<double> sup = node_norms(traj, kInfinity);
  const double initial = sup.front();
  double peak = 0.0;
  double worst_step = 0.0;
  for (std::size_t m = 0; m < sup.size(); ++m) {
    report.series.emplace_back(traj.time(m), sup[m]);
    peak = std::max(peak, sup[m]);
    if (m > 0) worst_step = std::max(worst_step, sup[m] - sup[m - 1]);
  }
  if (initial == 0.0) {
    report.measured = peak == 0.0 ? 0.0 : kInfinity;
    report.deviation = peak;
    report.pass = peak == 0.0;
    return report;
  }
  report.measured = peak / initial;
  report.deviation = worst_step / initial;
  report.pass = peak <= initial * (1.0 + 1e-6) && worst_step <= 1e-8 * initial;
  report.notes = "measured = max ||theta||_inf / ||theta_0||_inf; deviation = largest step increase";
  return report;
}

ProbeReport riesz_growth_report(const Trajectory& traj, const SolverConfig& cfg) {
  if (traj.empty()) throw std::invalid_argument("riesz_growth_report: empty trajectory");
  ProbeReport report;
  report.name = "riesz-growth";
  report.config = "alpha=" + format_number(cfg.alpha());
  const double initial = riesz_perp_lp_norm(traj.field(0), kInfinity);
  if (initial == 0.0) {
    report.skipped = true;
    report.notes = "initial Riesz norm is zero; probe skipped";
    return report;
  }
  double eta = 0.0;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const double value = riesz_perp_lp_norm(traj.field(m), kInfinity);
    report.series.emplace_back(traj.time(m), value);
    if (traj.time(m) > 0.0) {
      eta = std::max(eta, std::log(value / (2.0 * initial)) / traj.time(m));
    }
  }
  report.measured = eta;
  report.pass = std::isfinite(eta);
  report.notes = "fitted eta recorded; only finiteness is asserted";
  return report;
}

ProbeReport blowup_lower_bound_probe(const Trajectory& traj, const SolverConfig& cfg,
                                     double t_star) {
  if (traj.empty()) throw std::invalid_argument("blowup_lower_bound_probe: empty trajectory");
  if (!(t_star > traj.times().back())) {
    throw std::invalid_argument("blowup_lower_bound_probe: T* must exceed the last node");
  }
  ProbeReport report;
  report.name = "blowup-lower-bound";
  report.config = "T*=" + format_number(t_star);
  double lowest = kInfinity;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const RealField& f = traj.field(m);
    const double size = linf_norm(f) + riesz_perp_lp_norm(f, kInfinity);
    const double product = std::pow(t_star - traj.time(m), cfg.nu()) * size;
    report.series.emplace_back(traj.time(m), product);
    lowest = std::min(lowest, product);
  }
  report.measured = lowest;
  report.pass = std::isfinite(lowest);
  report.notes = "inf of (T*-t)^nu (||theta||_inf + ||R_perp theta||_inf); recorded only";
  return report;
}

FieldFamily critical_bump_family(const Grid2D& grid, const SolverConfig& cfg, double length,
                                 double offset_x, double offset_y) {
  return [grid, alpha = cfg.alpha(), length, offset_x, offset_y](double horizon) {
    const double width = length * std::pow(horizon, 1.0 / (2.0 * alpha));
    const double period = grid.period();
    const double cx = 0.5 * period + offset_x * width;
    const double cy = 0.5 * period + offset_y * width;
    auto wrap = [period](double d) { return d - period * std::round(d / period); };
    return RealField::from_function(grid, [&](double x, double y) {
      const double dx = wrap(x - cx);
      const double dy = wrap(y - cy);
      return std::exp(-(dx * dx + dy * dy) / (2.0 * width * width));
    });
  };
}

std::pair<FieldFamily, FieldFamily> default_bump_pair(const Grid2D& grid,
                                                      const SolverConfig& cfg) {
  return {critical_bump_family(grid, cfg, 0.75, 0.0, 0.0),
          critical_bump_family(grid, cfg, 0.75, 1.0, 0.5)};
}

ProbeReport bilinear_estimate_probe(const FieldFamily& u, const FieldFamily& v,
                                    const SolverConfig& cfg, double p,
                                    const std::vector<double>& horizons,
                                    const BilinearProbeOptions& options) {
  if (!(p > cfg.p_c())) throw std::invalid_argument("bilinear_estimate_probe: need p > p_c");
  ProbeReport report;
  report.name = "bilinear-ess";
  report.expected = (1.0 / cfg.p_c() - 1.0 / p) / cfg.alpha();
  report.tolerance = options.tolerance;
  report.config = "alpha=" + format_number(cfg.alpha()) + " p=" + format_number(p);
  std::vector<double> ratios;
  for (double horizon : horizons) {
    const TimeGrid tg(horizon, options.intervals, 1.0);
    const RealField uf = u(horizon);
    const RealField vf = v(horizon);
    const double denominator = lp_norm(uf, p) * lp_norm(vf, p);
    if (denominator == 0.0) {
      ratios.push_back(0.0);
      continue;
    }
    const Trajectory b = bilinear_B(constant_trajectory(uf, tg), constant_trajectory(vf, tg), cfg, tg);
    const std::vector<double> norms = node_norms(b, p);
    ratios.push_back(*std::max_element(norms.begin(), norms.end()) / denominator);
  }
  finish_slope_report(report, horizons, ratios);
  return report;
}

ProbeReport critical_bilinear_probe(const FieldFamily& u, const FieldFamily& v,
                                    const SolverConfig& cfg,
                                    const std::vector<double>& horizons,
                                    const BilinearProbeOptions& options) {
  ProbeReport report;
  report.name = "bilinear-critical";
  report.expected = 1.0 - 1.0 / (2.0 * cfg.alpha());
  report.tolerance = options.tolerance;
  report.config = "alpha=" + format_number(cfg.alpha()) + " q=" + format_number(options.time_q);
  const double pc = cfg.p_c();
  const double q = options.time_q;
  std::vector<double> ratios;
  for (double horizon : horizons) {
    const TimeGrid tg(horizon, options.intervals, 1.0);
    const RealField uf = u(horizon);
    const RealField vf = v(horizon);
    const double u_size = linf_norm(uf) + riesz_perp_lp_norm(uf, kInfinity);
    const double v_size = std::pow(horizon, 1.0 / q) * lp_norm(vf, pc);
    if (u_size == 0.0 || v_size == 0.0) {
      ratios.push_back(0.0);
      continue;
    }
    const Trajectory ut = constant_trajectory(uf, tg);
    const Trajectory vt = constant_trajectory(vf, tg);
    const double forward = time_lq(tg.nodes(), node_norms(bilinear_B(ut, vt, cfg, tg), pc), q);
    const double reverse = time_lq(tg.nodes(), node_norms(bilinear_B(vt, ut, cfg, tg), pc), q);
    ratios.push_back((forward + reverse) / (u_size * v_size));
  }
  finish_slope_report(report, horizons, ratios);
  return report;
}

ProbeReport kernel_exponent_probe(double alpha, double r, const std::vector<double>& t_list,
                                  double tolerance) {
  if (t_list.size() < 2) throw std::invalid_argument("kernel_exponent_probe: need >= 2 times");
  const auto [t_min, t_max] = std::minmax_element(t_list.begin(), t_list.end());
  const Grid2D grid = kernel_grid(alpha, *t_min, *t_max);
  ProbeReport report;
  report.name = "kernel-exponent-r" + format_number(r);
  report.expected = kernel_exponent(alpha, r);
  report.tolerance = tolerance;
  report.config = "alpha=" + format_number(alpha) + " n=" + std::to_string(grid.n()) +
                  " L=" + format_number(grid.period());
  std::vector<double> norms;
  double mass_error = 0.0;
  for (double t : t_list) {
    if (!kernel_resolved(alpha, t, grid)) {
      throw std::logic_error("kernel_exponent_probe: resolution contract violated");
    }
    norms.push_back(kernel_norm(alpha, t, r, grid));
    if (r == 1.0) mass_error = std::max(mass_error, std::abs(norms.back() - 1.0));
  }
  finish_slope_report(report, t_list, norms);
  if (r == 1.0) {
    report.notes = "max | ||K_t||_1 - 1 | = " + format_number(mass_error);
    report.pass = report.pass && mass_error <= 1e-3;
  }
  return report;
}

std::string TrackedNorm::label() const {
  switch (kind) {
    case Kind::kLebesgue:
      return "L" + format_number(p);
    case Kind::kBesov:
      return std::string(besov.homogeneous ? "Bdot" : "B") + "(s=" + format_number(besov.s) +
             ";p=" + format_number(besov.p) + ";q=" + format_number(besov.q) + ")";
    case Kind::kBTilde:
      return "Btilde";
  }
  return "unknown";
}

void PersistenceReport::write_csv(std::ostream& out) const {
  out << "time";
  for (const std::string& label : labels) out << ',' << label;
  out << '\n';
  for (std::size_t m = 0; m < times.size(); ++m) {
    out << format_number(times[m]);
    for (double v : values[m]) out << ',' << format_number(v);
    out << '\n';
  }
}

PersistenceReport persistence_tracker(const Trajectory& traj,
                                      const std::vector<TrackedNorm>& norms,
                                      const FilterBank& bank, const SolverConfig& cfg,
                                      double ceiling) {
  PersistenceReport report;
  report.ceiling = ceiling;
  for (const TrackedNorm& norm : norms) report.labels.push_back(norm.label());
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const RealField& f = traj.field(m);
    std::vector<double> row;
    for (const TrackedNorm& norm : norms) {
      switch (norm.kind) {
        case TrackedNorm::Kind::kLebesgue:
          row.push_back(lp_norm(f, norm.p));
          break;
        case TrackedNorm::Kind::kBesov:
          row.push_back(besov_norm(f, norm.besov, bank));
          break;
        case TrackedNorm::Kind::kBTilde:
          row.push_back(btilde_norm(f, cfg, bank));
          break;
      }
    }
    report.times.push_back(traj.time(m));
    report.values.push_back(std::move(row));
  }
  for (std::size_t q = 0; q < norms.size(); ++q) {
    const double initial = report.values.front()[q];
    double peak = 0.0;
    bool monotone = true;
    for (std::size_t m = 0; m < report.values.size(); ++m) {
      peak = std::max(peak, report.values[m][q]);
      if (m > 0 && report.values[m][q] > report.values[m - 1][q] + 1e-10 * initial) {
        monotone = false;
      }
    }
    const double growth = initial > 0.0 ? peak / initial : (peak == 0.0 ? 0.0 : kInfinity);
    report.growth.push_back(growth);
    report.nonincreasing.push_back(monotone);
    report.pass = report.pass && growth < ceiling;
  }
  return report;
}

ProbeReport fluctuation_regularity_probe(const RealField& theta0, const Trajectory& traj,
                                         const SolverConfig& cfg, const FilterBank& bank,
                                         double p, std::size_t node) {
  const double t = traj.time(node);
  if (!(t > 0.0)) throw std::invalid_argument("fluctuation_regularity_probe: need t > 0");
  ProbeReport report;
  report.name = "fluctuation-regularity";
  report.config = "t=" + format_number(t) + " p=" + format_number(p);
  const RealField tendency =
      transform_inverse(semigroup_apply(transform_forward(theta0), cfg.alpha(), t));
  const RealField fluctuation = traj.field(node) - tendency;
  const double besov01 = besov_norm(fluctuation, {0.0, p, 1.0, true}, bank);
  report.measured = besov01;
  report.notes = "measured = homogeneous B^{0,1}_p norm of the fluctuation";
  if (besov01 == 0.0) {
    report.notes += "; fluctuation vanishes";
    return report;
  }

  const std::vector<double> w_blocks = block_norms(fluctuation, bank, p);
  const std::vector<double> e_blocks = block_norms(tendency, bank, p);
  const double w_top = *std::max_element(w_blocks.begin(), w_blocks.end());
  const double e_top = *std::max_element(e_blocks.begin(), e_blocks.end());
  const auto peak = static_cast<std::size_t>(
      std::max_element(e_blocks.begin(), e_blocks.end()) - e_blocks.begin());
  std::vector<double> js;
  std::vector<double> w_log;
  std::vector<double> e_log;
  for (std::size_t b = peak + 1; b < e_blocks.size(); ++b) {
    if (w_blocks[b] <= 1e-12 * w_top || e_blocks[b] <= 1e-12 * e_top) break;
    js.push_back(static_cast<double>(bank.j_min() + static_cast<int>(b)));
    w_log.push_back(std::log2(w_blocks[b]));
    e_log.push_back(std::log2(e_blocks[b]));
  }
  for (std::size_t b = 0; b < w_blocks.size(); ++b) {
    report.series.emplace_back(bank.j_min() + static_cast<double>(b), w_blocks[b]);
  }
  if (js.size() < 2) {
    report.notes += "; too few resolved high-frequency blocks to compare decay";
    return report;
  }
  const double w_rate = -fit_line(js, w_log).slope;
  const double e_rate = -fit_line(js, e_log).slope;
  report.expected = e_rate;
  report.deviation = w_rate - e_rate;
  report.tolerance = 0.0;
  report.pass = w_rate >= e_rate;
  report.notes += "; deviation = fluctuation decay rate - tendency decay rate (log2 per block)";
  return report;
}

std::vector<double> varpi_sequence(const std::vector<double>& sigma, double lambda,
                                   std::size_t count) {
  std::vector<double> out(count, 0.0);
  for (std::size_t n = 0; n < count; ++n) {
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t index = n - k;
      if (index < sigma.size()) sum += sigma[index] * power;
      power *= lambda;
    }
    out[n] = 2.0 * sum;
  }
  return out;
}

ProbeReport convergence_diagnostic(const std::vector<double>& diffs,
                                   const std::vector<double>& iterate_norms, double lambda,
                                   const std::vector<double>& sigma) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("convergence_diagnostic: lambda must lie in [0, 1)");
  }
  if (iterate_norms.size() < diffs.size()) {
    throw std::invalid_argument("convergence_diagnostic: need one iterate norm per difference");
  }
  ProbeReport report;
  report.name = "convergence";
  report.config = "lambda=" + format_number(lambda);
  report.tolerance = 1e-6;
  auto sigma_at = [&](std::size_t n) { return n < sigma.size() ? sigma[n] : 0.0; };

  bool hypothesis = true;
  for (std::size_t n = 1; n < diffs.size(); ++n) {
    const double rhs =
        sigma_at(n) * (iterate_norms[n] + iterate_norms[n - 1]) + lambda * diffs[n - 1];
    if (diffs[n] > rhs * (1.0 + 1e-12) + 1e-300) hypothesis = false;
  }

  double partial = 0.0;
  for (std::size_t n = 0; n < diffs.size(); ++n) {
    partial += diffs[n];
    report.series.emplace_back(static_cast<double>(n), partial);
  }
  const double last = diffs.empty() ? 0.0 : diffs.back();
  const bool summable = partial == 0.0 || last <= report.tolerance * partial;

  const std::vector<double> varpi = varpi_sequence(sigma, lambda, iterate_norms.size());
  bool bounded = true;
  if (iterate_norms.size() >= 2 && !diffs.empty()) {
    double running_max = std::max(iterate_norms[0], iterate_norms[1]);
    double bound = running_max;
    double power = lambda;
    for (std::size_t n = 1; n + 1 < iterate_norms.size(); ++n) {
      bound = (1.0 + varpi[n]) * bound + power * diffs[0];
      power *= lambda;
      running_max = std::max(running_max, iterate_norms[n + 1]);
      if (running_max > bound * (1.0 + 1e-12)) bounded = false;
    }
  }
  double varpi_sum = 0.0;
  for (double w : varpi) varpi_sum += w;

  report.expected = std::exp(varpi_sum);
  report.measured = partial;
  report.deviation = partial == 0.0 ? 0.0 : last / partial;
  report.pass = hypothesis && summable && bounded;
  std::ostringstream notes;
  notes << "hypothesis=" << (hypothesis ? "ok" : "violated")
        << " partial_sums=" << (summable ? "stable" : "unstable")
        << " sup_bound=" << (bounded ? "ok" : "violated")
        << "; expected = exp(sum varpi), measured = sum of differences";
  report.notes = notes.str();
  return report;
}

}  // namespace qg
