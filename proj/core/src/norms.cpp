#include "qg/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "qg/operators.hpp"
#include "qg/transform.hpp"

namespace qg {
namespace {

double q_sum(const std::vector<double>& terms, double q) {
  if (std::isinf(q)) {
    double best = 0.0;
    for (double t : terms) best = std::max(best, t);
    return best;
  }
  double sum = 0.0;
  for (double t : terms) sum += std::pow(t, q);
  return std::pow(sum, 1.0 / q);
}

double base_value(const RealField& f, const WeightedNormSpec& spec) {
  const double value = lp_norm(f, spec.p);
  if (spec.base == BaseNorm::kLebesgue) return value;
  return value + riesz_perp_lp_norm(f, spec.p);
}

}  // namespace

void BesovSpec::validate() const {
  if (!(p >= 1.0) || !(q >= 1.0)) {
    throw std::invalid_argument("BesovSpec: p and q must lie in [1, inf]");
  }
}

double besov_norm(const RealField& f, const BesovSpec& spec, const FilterBank& bank) {
  spec.validate();
  const std::vector<double> blocks = block_norms(f, bank, spec.p);
  std::vector<double> terms;
  const int first = spec.homogeneous ? bank.j_min() : 0;
  for (int j = first; j <= bank.j_max(); ++j) {
    const double block = blocks[static_cast<std::size_t>(j - bank.j_min())];
    terms.push_back(block == 0.0 ? 0.0 : std::exp2(j * spec.s) * block);
  }
  const double dyadic = q_sum(terms, spec.q);
  if (spec.homogeneous) return dyadic;
  return lp_norm(lp_lowpass_part(f, bank), spec.p) + dyadic;
}

double riesz_perp_lp_norm(const RealField& f, double p) {
  const SpectralVector u = riesz_perp(transform_forward(f));
  return lp_norm(transform_inverse(u.first), p) + lp_norm(transform_inverse(u.second), p);
}

double btilde_norm(const RealField& f, const SolverConfig& cfg, const FilterBank& bank) {
  const BesovSpec spec{1.0 - 2.0 * cfg.alpha(), kInfinity, kInfinity, false};
  const SpectralVector u = riesz_perp(transform_forward(f));
  return besov_norm(f, spec, bank) + besov_norm(transform_inverse(u.first), spec, bank) +
         besov_norm(transform_inverse(u.second), spec, bank);
}

void WeightedNormSpec::validate() const {
  if (!(mu >= 0.0)) throw std::invalid_argument("WeightedNormSpec: mu must be >= 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("WeightedNormSpec: T must be > 0");
  if (!(p >= 1.0)) throw std::invalid_argument("WeightedNormSpec: p must be >= 1");
}

double weighted_sup_norm(const Trajectory& traj, const WeightedNormSpec& spec) {
  spec.validate();
  if (traj.empty()) throw std::invalid_argument("weighted_sup_norm: empty trajectory");
  const double slack = 1e-12 * spec.horizon;
  double best = 0.0;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const double t = traj.time(m);
    if (t <= 0.0) continue;
    if (t > spec.horizon + slack) {
      throw std::invalid_argument("weighted_sup_norm: node beyond the horizon");
    }
    best = std::max(best, std::pow(t, spec.mu) * base_value(traj.field(m), spec));
  }
  return best;
}

std::vector<double> etnu_profile(const Trajectory& traj, const SolverConfig& cfg) {
  std::vector<double> out;
  out.reserve(traj.size());
  const WeightedNormSpec spec{cfg.nu(), 1.0, BaseNorm::kLebesgueWithRiesz, kInfinity};
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const double t = traj.time(m);
    out.push_back(t > 0.0 ? std::pow(t, cfg.nu()) * base_value(traj.field(m), spec) : 0.0);
  }
  return out;
}

double etnu_norm(const Trajectory& traj, const SolverConfig& cfg) {
  if (traj.empty()) throw std::invalid_argument("etnu_norm: empty trajectory");
  return weighted_sup_norm(
      traj, {cfg.nu(), traj.times().back(), BaseNorm::kLebesgueWithRiesz, kInfinity});
}

CharacterizationResult semigroup_characterization(const RealField& f, double s, double p,
                                                  const SolverConfig& cfg,
                                                  const std::vector<double>& t_nodes) {
  if (!(s < 0.0)) {
    throw std::invalid_argument("semigroup_characterization: requires s < 0");
  }
  const SpectralField spectrum = transform_forward(f);
  CharacterizationResult result;
  for (double t : t_nodes) {
    if (!(t > 0.0)) {
      throw std::invalid_argument("semigroup_characterization: nodes must be positive");
    }
    const RealField smoothed = transform_inverse(semigroup_apply(spectrum, cfg.alpha(), t));
    const double value = std::pow(t, -s / (2.0 * cfg.alpha())) * lp_norm(smoothed, p);
    result.series.push_back(value);
    result.sup = std::max(result.sup, value);
  }
  return result;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) throw std::runtime_error("format_number failed");
  return std::string(buffer, end);
}

void write_norm_csv(std::ostream& out, const std::vector<NormReportRow>& rows) {
  out << "quantity,s,p,q,homogeneous,value\n";
  for (const NormReportRow& row : rows) {
    out << row.quantity << ',' << format_number(row.s) << ',' << format_number(row.p) << ','
        << format_number(row.q) << ',' << (row.homogeneous ? 1 : 0) << ','
        << format_number(row.value) << '\n';
  }
}

}  // namespace qg
