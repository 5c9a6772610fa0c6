#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qg/filter_bank.hpp"
#include "qg/grid.hpp"
#include "qg/trajectory.hpp"

namespace qg {

struct BesovSpec {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;
  bool homogeneous = true;

  void validate() const;
};

/// Inhomogeneous: ||S_0 f||_p + (sum_{j>=0} (2^{js} ||Delta_j f||_p)^q)^{1/q}.
/// Homogeneous: the q-sum over every block of the bank (the zero mode never
/// enters a block). q = infinity takes the supremum.
double besov_norm(const RealField& f, const BesovSpec& spec, const FilterBank& bank);

/// ||R_perp f||_X as the sum of the two component norms.
double riesz_perp_lp_norm(const RealField& f, double p);

/// ||f||_{B^{1-2a,inf}_inf} + ||R_perp f||_{B^{1-2a,inf}_inf} (inhomogeneous,
/// component norms summed).
double btilde_norm(const RealField& f, const SolverConfig& cfg, const FilterBank& bank);

enum class BaseNorm {
  kLebesgue,           ///< ||f||_p
  kLebesgueWithRiesz,  ///< ||f||_p + ||R_perp f||_p
};

struct WeightedNormSpec {
  double mu = 0.0;
  double horizon = 1.0;
  BaseNorm base = BaseNorm::kLebesgue;
  double p = kInfinity;

  void validate() const;
};

/// max over nodes 0 < t_m <= T of t_m^mu * base(f(t_m)).
double weighted_sup_norm(const Trajectory& traj, const WeightedNormSpec& spec);

/// sup_{0<t<=T} t^nu (||v||_inf + ||R_perp v||_inf) with T the last node.
double etnu_norm(const Trajectory& traj, const SolverConfig& cfg);

/// Per-node t^nu (||v||_inf + ||R_perp v||_inf); 0 at t = 0.
std::vector<double> etnu_profile(const Trajectory& traj, const SolverConfig& cfg);

struct CharacterizationResult {
  double sup = 0.0;
  std::vector<double> series;  ///< t^{-s/(2a)} ||e^{-t(-Delta)^a} f||_p per node
};

/// Semigroup estimator of the homogeneous B^{s,inf}_p norm (s < 0).
CharacterizationResult semigroup_characterization(const RealField& f, double s, double p,
                                                  const SolverConfig& cfg,
                                                  const std::vector<double>& t_nodes);

/// One row of a norm report CSV: quantity,s,p,q,homogeneous,value.
struct NormReportRow {
  std::string quantity;
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;
  bool homogeneous = true;
  double value = 0.0;
};

void write_norm_csv(std::ostream& out, const std::vector<NormReportRow>& rows);

/// Shortest round-trip decimal form; "inf" for infinity.
std::string format_number(double value);

}  // namespace qg
