#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qg/grid.hpp"
#include "qg/operators.hpp"
#include "qg/random_field.hpp"
#include "qg/trajectory.hpp"

namespace qg {

/// Nodes t_m = T (m/M)^gamma for m = 0..M.
class TimeGrid {
 public:
  TimeGrid(double horizon, int intervals, double gamma = 2.0);

  double horizon() const { return horizon_; }
  int intervals() const { return intervals_; }
  double gamma() const { return gamma_; }
  const std::vector<double>& nodes() const { return nodes_; }

 private:
  double horizon_;
  int intervals_;
  double gamma_;
  std::vector<double> nodes_;
};

/// (1 - exp(-z)) / z, continuous at z = 0.
double phi1(double z);
/// (exp(-z) - 1 + z) / z^2, continuous at z = 0.
double phi2(double z);
/// (1 - exp(-z)(1 + z)) / z^2, continuous at z = 0.
double ramp_weight(double z);

/// L(v)(t_m) = int_0^{t_m} exp(-(t_m - s)(-Delta)^a) div v(s) ds with v
/// interpolated linearly in time between nodes and the exponential integrated
/// exactly per mode.
Trajectory duhamel_linear(const VectorTrajectory& forcing, const SolverConfig& cfg,
                          const TimeGrid& tg);

/// B[theta1, theta2] = -L(theta1 R_perp theta2), product dealiased per node.
Trajectory bilinear_B(const Trajectory& theta1, const Trajectory& theta2,
                      const SolverConfig& cfg, const TimeGrid& tg);

/// t -> exp(-t(-Delta)^a) theta0 on the nodes of tg.
Trajectory free_evolution(const RealField& theta0, const SolverConfig& cfg,
                          const TimeGrid& tg);

/// Empirical smallness threshold for the Picard iteration.
struct CalibrationRecord {
  double mu0_empirical = 0.0;
  double alpha = 0.75;
  double amplitude = 0.0;          ///< calibrated RMS amplitude of the family
  double max_contraction = 0.0;    ///< worst ratio observed at that amplitude
  int n = 0;
  double period = 0.0;
  double horizon = 0.0;
  int intervals = 0;
  double gamma = 0.0;

  void validate() const;
};

struct PicardResult {
  std::vector<double> iterate_norms;  ///< ||phi_n|| in E_T^nu, n = 0, 1, ...
  std::vector<double> diff_norms;     ///< ||phi_{n+1} - phi_n|| in E_T^nu
  bool converged = false;
  bool diverged = false;
  Trajectory limit;
  double residual = 0.0;  ///< ||theta - phi_0 - B[theta, theta]|| in E_T^nu
  std::optional<double> mu0_margin;

  /// diff_norms[n] / diff_norms[n-1] for n >= 1.
  std::vector<double> contraction_ratios() const;
};

struct PicardOptions {
  int max_iter = 50;
  double tol = 1e-10;
  std::optional<CalibrationRecord> calibration;
  bool compute_residual = true;
};

/// phi_0 = exp(-t(-Delta)^a) theta0, phi_{n+1} = phi_0 + B[phi_n, phi_n].
/// Stops when a diff norm drops to tol, after max_iter steps, or when the diff
/// norm grows on three consecutive steps (reported as diverged).
PicardResult picard_iterate(const RealField& theta0, const SolverConfig& cfg,
                            const TimeGrid& tg, const PicardOptions& options = {});

struct EtdOptions {
  int record_every = 1;
  /// Called after every step with (step, time, spectrum).
  std::function<void(int, double, const SpectralField&)> observer;
};

/// Second-order exponential time differencing (two-stage predictor-corrector)
/// for d/dt theta = -(-Delta)^a theta - div(theta R_perp theta).
/// Throws std::runtime_error naming the step on a non-finite state.
Trajectory evolve_etd(const RealField& theta0, const SolverConfig& cfg, double dt,
                      int n_steps, const EtdOptions& options = {});

struct SmallnessReport {
  double phi0_norm = 0.0;
  double margin = 0.0;  ///< phi0_norm / mu0_empirical
  bool exceeded = false;
  /// Largest node T' with margin over [0, T'] <= 1 (only set when exceeded).
  std::optional<double> safe_horizon;
  std::optional<double> next_node_margin;
};

SmallnessReport smallness_check(const RealField& theta0, const SolverConfig& cfg,
                                const TimeGrid& tg, const CalibrationRecord& calib);

struct CalibrationSpec {
  double alpha = 0.75;
  int n = 64;
  double period = 6.283185307179586;
  double horizon = 1.0;
  int intervals = 32;
  double gamma = 2.0;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  double k_min = 1.0;
  double k_max = 3.0;
  int probe_iterations = 40;
  int bisection_steps = 8;
  double initial_amplitude = 0.25;
};

/// Bisects the RMS amplitude of the seeded family until the worst observed
/// contraction ratio crosses 1/2. mu0_empirical is the smallest ||phi_0|| over
/// the family at the largest passing amplitude.
CalibrationRecord calibrate_mu0(const CalibrationSpec& spec);

/// Relative size of the difference norm at which contraction measurements stop.
inline constexpr double kContractionFloor = 1e-10;

/// Largest diff ratio of the Picard scheme, iterated until the difference
/// falls to kContractionFloor * ||phi_0|| or `iterations` steps are done.
double observed_contraction(const RealField& theta0, const SolverConfig& cfg,
                            const TimeGrid& tg, int iterations);

}  // namespace qg
