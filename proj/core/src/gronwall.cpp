#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qg/probes.hpp"
#include "qg/special.hpp"

namespace qg {
namespace {

// Weights of f(s_l) and f(s_{l+1}) in int_{s_l}^{s_{l+1}} f(s) (t - s)^-kappa ds
// for f linear on the interval.
std::pair<double, double> interval_weights(double t, double left, double right, double kappa) {
  const double h = right - left;
  const double a = t - right;
  const double b = t - left;
  const double i0 = (std::pow(b, 1.0 - kappa) - std::pow(a, 1.0 - kappa)) / (1.0 - kappa);
  const double i1 = (std::pow(b, 2.0 - kappa) - std::pow(a, 2.0 - kappa)) / (2.0 - kappa);
  return {(i1 - a * i0) / h, (b * i0 - i1) / h};
}

}  // namespace

void GronwallParams::validate() const {
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) throw std::invalid_argument("Gronwall: c1, c2 must be >= 0");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("Gronwall: kappa must lie in (0, 1)");
}

double GronwallParams::gamma_kappa() const { return lanczos_gamma(1.0 - kappa); }

double GronwallParams::rate() const {
  validate();
  return std::pow(2.0 * c2 * gamma_kappa(), 1.0 / (1.0 - kappa));
}

double GronwallParams::bound(double t) const { return 2.0 * c1 * std::exp(rate() * t); }

std::vector<double> volterra_right_side(const GronwallParams& params,
                                        const SampledFunction& samples) {
  params.validate();
  if (samples.t.size() != samples.f.size() || samples.t.empty()) {
    throw std::invalid_argument("volterra_right_side: malformed samples");
  }
  std::vector<double> out(samples.t.size(), params.c1);
  for (std::size_t m = 1; m < samples.t.size(); ++m) {
    double integral = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
      const auto [w_left, w_right] =
          interval_weights(samples.t[m], samples.t[l], samples.t[l + 1], params.kappa);
      integral += w_left * samples.f[l] + w_right * samples.f[l + 1];
    }
    out[m] += params.c2 * integral;
  }
  return out;
}

SampledFunction solve_volterra_equality(const GronwallParams& params, double horizon,
                                        int intervals) {
  params.validate();
  if (!(horizon > 0.0) || intervals < 1) {
    throw std::invalid_argument("solve_volterra_equality: need T > 0 and M >= 1");
  }
  SampledFunction out;
  for (int m = 0; m <= intervals; ++m) out.t.push_back(horizon * m / intervals);
  out.f.assign(out.t.size(), 0.0);
  out.f[0] = params.c1;
  for (std::size_t m = 1; m < out.t.size(); ++m) {
    double known = 0.0;
    double self = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
      const auto [w_left, w_right] =
          interval_weights(out.t[m], out.t[l], out.t[l + 1], params.kappa);
      known += w_left * out.f[l];
      if (l + 1 == m) {
        self = w_right;
      } else {
        known += w_right * out.f[l + 1];
      }
    }
    const double denominator = 1.0 - params.c2 * self;
    if (!(denominator > 0.0)) {
      throw std::runtime_error("solve_volterra_equality: step too coarse for c2");
    }
    out.f[m] = (params.c1 + params.c2 * known) / denominator;
  }
  return out;
}

ProbeReport gronwall_probe(const GronwallParams& params, const SampledFunction& samples,
                           double hypothesis_tol) {
  ProbeReport report;
  report.name = "gronwall";
  std::ostringstream config;
  config << "c1=" << params.c1 << " c2=" << params.c2 << " kappa=" << params.kappa;
  report.config = config.str();
  report.expected = params.rate();
  report.tolerance = 1.0;

  const std::vector<double> rhs = volterra_right_side(params, samples);
  for (std::size_t m = 0; m < rhs.size(); ++m) {
    if (samples.f[m] > rhs[m] * (1.0 + hypothesis_tol) + hypothesis_tol) {
      report.pass = false;
      report.notes = "hypothesis not satisfied at t=" + format_number(samples.t[m]);
      report.measured = samples.f[m] / rhs[m];
      report.deviation = kInfinity;
      return report;
    }
  }
  // measured: worst ratio f / bound; the bound holds when it stays <= 1.
  double worst = 0.0;
  for (std::size_t m = 0; m < samples.t.size(); ++m) {
    const double bound = params.bound(samples.t[m]);
    const double ratio = bound > 0.0 ? samples.f[m] / bound : (samples.f[m] > 0.0 ? kInfinity : 0.0);
    worst = std::max(worst, ratio);
    report.series.emplace_back(samples.t[m], samples.f[m]);
  }
  report.measured = worst;
  report.deviation = worst;
  report.pass = worst <= 1.0;
  report.notes = "expected = rate rho; measured = max f/(2 c1 e^{rho t})";
  return report;
}

}  // namespace qg
