#include <gtest/gtest.h>

#include <cmath>

#include "qg/mild.hpp"
#include "qg/norms.hpp"
#include "qg/random_field.hpp"
#include "qg/transform.hpp"

namespace qg {
namespace {

RealField cos_x1(const Grid2D& grid) {
  return RealField::from_function(grid, [](double x, double) { return std::cos(x); });
}

// Calibrated with calibrate_mu0 on the default CalibrationSpec.
constexpr double kMu0 = 4.554341138482997;

TEST(TimeGrid, GradedNodes) {
  const TimeGrid tg(2.0, 4, 2.0);
  ASSERT_EQ(tg.nodes().size(), 5u);
  EXPECT_EQ(tg.nodes()[0], 0.0);
  EXPECT_DOUBLE_EQ(tg.nodes()[1], 2.0 / 16.0);
  EXPECT_DOUBLE_EQ(tg.nodes()[2], 0.5);
  EXPECT_EQ(tg.nodes()[4], 2.0);
  EXPECT_THROW(TimeGrid(0.0, 4), std::invalid_argument);
  EXPECT_THROW(TimeGrid(1.0, 0), std::invalid_argument);
  EXPECT_THROW(TimeGrid(1.0, 4, 0.5), std::invalid_argument);
}

TEST(PhiFunctions, TaylorAndDirectForms) {
  for (double z : {0.0, 1e-8, 1e-3, 0.2, 0.49}) {
    const double z2 = z * z;
    const double z3 = z2 * z;
    const double z4 = z2 * z2;
    EXPECT_NEAR(phi1(z), 1.0 - z / 2.0 + z2 / 6.0 - z3 / 24.0, z4 / 100.0 + 1e-15);
    EXPECT_NEAR(phi2(z), 0.5 - z / 6.0 + z2 / 24.0 - z3 / 120.0, z4 / 500.0 + 1e-15);
    EXPECT_NEAR(ramp_weight(z), 0.5 - z / 3.0 + z2 / 8.0 - z3 / 30.0, z4 / 100.0 + 1e-15);
  }
  for (double z : {0.51, 1.0, 7.0, 300.0}) {
    const double e = std::exp(-z);
    EXPECT_NEAR(phi1(z), (1.0 - e) / z, 1e-14);
    EXPECT_NEAR(phi2(z), (e - 1.0 + z) / (z * z), 1e-14);
    EXPECT_NEAR(ramp_weight(z), (1.0 - e * (1.0 + z)) / (z * z), 1e-14);
  }
  // Continuity across the switch between series and closed form.
  EXPECT_NEAR(phi2(0.5 - 1e-12), phi2(0.5 + 1e-12), 1e-11);
  EXPECT_NEAR(ramp_weight(0.5 - 1e-12), ramp_weight(0.5 + 1e-12), 1e-11);
}

TEST(Duhamel, ZeroForcing) {
  const Grid2D grid(16);
  const TimeGrid tg(1.0, 8);
  VectorTrajectory forcing;
  for (double t : tg.nodes()) forcing.append(t, RealField(grid), RealField(grid));
  const Trajectory out = duhamel_linear(forcing, SolverConfig(0.75), tg);
  for (const RealField& f : out.fields()) EXPECT_EQ(linf_norm(f), 0.0);
}

TEST(Duhamel, ConstantSineForcing) {
  const Grid2D grid(16);
  const TimeGrid tg(1.5, 10, 2.0);
  const RealField sine = RealField::from_function(grid, [](double x, double) { return std::sin(x); });
  VectorTrajectory forcing;
  for (double t : tg.nodes()) forcing.append(t, sine, RealField(grid));
  const Trajectory out = duhamel_linear(forcing, SolverConfig(0.75), tg);
  for (std::size_t m = 0; m < out.size(); ++m) {
    const double t = tg.nodes()[m];
    EXPECT_LT(max_distance(out.field(m), (1.0 - std::exp(-t)) * cos_x1(grid)), 1e-13);
  }
}

TEST(Duhamel, MismatchedNodesRejected) {
  const Grid2D grid(16);
  VectorTrajectory forcing;
  forcing.append(0.0, RealField(grid), RealField(grid));
  forcing.append(0.5, RealField(grid), RealField(grid));
  EXPECT_THROW(duhamel_linear(forcing, SolverConfig(0.75), TimeGrid(1.0, 1)), std::invalid_argument);
}

// Forcing t^-mu g maps to a solution with finite weight mu - 1 + 1/(2 alpha).
// The ratio of the weighted norms is recorded across horizons.
TEST(Duhamel, SmoothnessShiftRatioStaysBounded) {
  const Grid2D grid(32);
  const SolverConfig cfg(0.75);
  const double mu = 0.5;
  const double shifted = mu - 1.0 + 1.0 / (2.0 * cfg.alpha());
  const RealField g1 = random_bandlimited(grid, {1, 1.0, 8.0, 1.0});
  const RealField g2 = random_bandlimited(grid, {2, 1.0, 8.0, 1.0});
  std::vector<double> ratios;
  for (double horizon : {0.0625, 0.25, 1.0}) {
    const TimeGrid tg(horizon, 64, 2.0);
    VectorTrajectory forcing;
    for (double t : tg.nodes()) {
      const double w = t > 0.0 ? std::pow(t, -mu) : 0.0;
      forcing.append(t, w * g1, w * g2);
    }
    Trajectory input;
    for (std::size_t m = 0; m < forcing.size(); ++m) {
      input.append(forcing.times()[m], forcing.first(m) + forcing.second(m));
    }
    const Trajectory out = duhamel_linear(forcing, cfg, tg);
    const double in_norm = weighted_sup_norm(input, {mu, horizon, BaseNorm::kLebesgue, kInfinity});
    const double out_norm = weighted_sup_norm(out, {shifted, horizon, BaseNorm::kLebesgue, kInfinity});
    ASSERT_GT(in_norm, 0.0);
    ratios.push_back(out_norm / in_norm);
  }
  for (double r : ratios) {
    EXPECT_TRUE(std::isfinite(r));
    EXPECT_GT(r, 0.0);
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  EXPECT_LT(*hi / *lo, 4.0);
}

TEST(Bilinear, ZeroAndOneDimensionalInputs) {
  const Grid2D grid(16);
  const SolverConfig cfg(0.75);
  const TimeGrid tg(1.0, 6, 1.0);
  Trajectory zero;
  Trajectory cosine;
  Trajectory random;
  const RealField r = random_bandlimited(grid, {3, 1.0, 4.0, 1.0});
  for (double t : tg.nodes()) {
    zero.append(t, RealField(grid));
    cosine.append(t, cos_x1(grid));
    random.append(t, r);
  }
  for (const RealField& f : bilinear_B(zero, random, cfg, tg).fields()) EXPECT_EQ(linf_norm(f), 0.0);
  for (const RealField& f : bilinear_B(random, zero, cfg, tg).fields()) EXPECT_EQ(linf_norm(f), 0.0);
  for (const RealField& f : bilinear_B(cosine, cosine, cfg, tg).fields()) EXPECT_LT(linf_norm(f), 1e-14);
}

TEST(Bilinear, Bilinearity) {
  const Grid2D grid(32);
  const SolverConfig cfg(0.75);
  const TimeGrid tg(0.5, 8, 2.0);
  Trajectory u;
  Trajectory v;
  Trajectory au;
  Trajectory bv;
  for (double t : tg.nodes()) {
    const RealField uf = random_bandlimited(grid, {10, 1.0, 6.0, 1.0 + t});
    const RealField vf = random_bandlimited(grid, {20, 1.0, 6.0, 2.0 - t});
    u.append(t, uf);
    v.append(t, vf);
    au.append(t, -1.5 * uf);
    bv.append(t, 0.25 * vf);
  }
  const Trajectory base = bilinear_B(u, v, cfg, tg);
  const Trajectory both = bilinear_B(au, bv, cfg, tg);
  for (std::size_t m = 1; m < base.size(); ++m) {
    const double scale = linf_norm(base.field(m));
    EXPECT_LT(max_distance(both.field(m), -0.375 * base.field(m)), 1e-12 * scale);
  }
}

TEST(Picard, TrivialData) {
  const Grid2D grid(16);
  const SolverConfig cfg(0.75);
  const TimeGrid tg(1.0, 8);
  const PicardResult zero = picard_iterate(RealField(grid), cfg, tg);
  EXPECT_TRUE(zero.converged);
  EXPECT_EQ(zero.diff_norms.size(), 1u);
  EXPECT_EQ(zero.diff_norms[0], 0.0);

  const PicardResult cosine = picard_iterate(0.3 * cos_x1(grid), cfg, tg);
  EXPECT_TRUE(cosine.converged);
  EXPECT_EQ(cosine.diff_norms.size(), 1u);
  EXPECT_LT(cosine.diff_norms[0], 1e-15);
}

TEST(Picard, ContractsOnSmallTwoModeData) {
  const Grid2D grid(64);
  const SolverConfig cfg(0.75);
  const TimeGrid tg(1.0, 32, 2.0);
  CalibrationRecord calib;
  calib.mu0_empirical = kMu0;
  PicardOptions options;
  options.calibration = calib;
  options.tol = 1e-11;
  const RealField theta0 = RealField::from_function(
      grid, [](double x, double y) { return 0.5 * (std::cos(x) + std::sin(2.0 * y)); });
  const PicardResult result = picard_iterate(theta0, cfg, tg, options);
  ASSERT_TRUE(result.mu0_margin.has_value());
  EXPECT_LT(*result.mu0_margin, 1.0);
  EXPECT_TRUE(result.converged);
  EXPECT_FALSE(result.diverged);
  for (double r : result.contraction_ratios()) EXPECT_LE(r, 0.5);
  for (double v : result.iterate_norms) EXPECT_LE(v, 2.0 * result.iterate_norms.front());
  EXPECT_LE(result.residual, 2.0 * options.tol);
}

TEST(Picard, LargeDataIsReportedAsDiverged) {
  const Grid2D grid(32);
  const SolverConfig cfg(0.75);
  const TimeGrid tg(1.0, 16, 2.0);
  PicardOptions options;
  options.max_iter = 40;
  const PicardResult result =
      picard_iterate(random_bandlimited(grid, {1, 1.0, 3.0, 60.0}), cfg, tg, options);
  EXPECT_FALSE(result.converged);
  EXPECT_TRUE(result.diverged);
}

TEST(Etd, LinearSolutionAndZeroData) {
  const Grid2D grid(32);
  const SolverConfig cfg(0.75);
  const Trajectory traj = evolve_etd(cos_x1(grid), cfg, 1e-3, 1000);
  EXPECT_LT(max_distance(traj.back(), std::exp(-1.0) * cos_x1(grid)), 1e-6);
  const Trajectory zero = evolve_etd(RealField(grid), cfg, 0.01, 10);
  EXPECT_EQ(linf_norm(zero.back()), 0.0);
}

TEST(Etd, ConservesTheMean) {
  const Grid2D grid(32);
  const SolverConfig cfg(0.75);
  const RealField theta0 = random_bandlimited(grid, {6, 1.0, 6.0, 1.0}) +
                           RealField::from_function(grid, [](double, double) { return 0.7; });
  const Complex start = transform_forward(theta0).at_mode(0, 0);
  double drift = 0.0;
  EtdOptions options;
  options.observer = [&](int, double, const SpectralField& s) {
    drift = std::max(drift, std::abs(s.at_mode(0, 0) - start));
  };
  evolve_etd(theta0, cfg, 5e-3, 200, options);
  EXPECT_LT(drift, 1e-14 * std::abs(start));
}

TEST(Etd, RecordsEveryNthStepAndLast) {
  const Grid2D grid(16);
  EtdOptions options;
  options.record_every = 4;
  const Trajectory traj = evolve_etd(cos_x1(grid), SolverConfig(0.75), 0.1, 10, options);
  ASSERT_EQ(traj.size(), 4u);
  EXPECT_NEAR(traj.time(1), 0.4, 1e-15);
  EXPECT_NEAR(traj.time(3), 1.0, 1e-15);
}

TEST(Etd, NonFiniteStateNamesTheStep) {
  const Grid2D grid(32);
  const RealField theta0 = random_bandlimited(grid, {1, 1.0, 10.0, 1e150});
  try {
    evolve_etd(theta0, SolverConfig(0.75), 1.0, 50);
    FAIL() << "expected a runtime_error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("step"), std::string::npos);
  }
}

TEST(Smallness, MarginsAndSafeHorizon) {
  const Grid2D grid(32);
  const SolverConfig cfg(0.75);
  const TimeGrid tg(1.0, 16, 2.0);
  CalibrationRecord calib;
  calib.mu0_empirical = 0.5;
  EXPECT_EQ(smallness_check(RealField(grid), cfg, tg, calib).margin, 0.0);

  const RealField theta0 = random_bandlimited(grid, {3, 1.0, 4.0, 1.0});
  const SmallnessReport one = smallness_check(theta0, cfg, tg, calib);
  const SmallnessReport two = smallness_check(2.0 * theta0, cfg, tg, calib);
  EXPECT_EQ(two.phi0_norm, 2.0 * one.phi0_norm);

  ASSERT_TRUE(two.exceeded);
  ASSERT_TRUE(two.safe_horizon.has_value());
  const Trajectory free = free_evolution(2.0 * theta0, cfg, tg);
  Trajectory prefix;
  std::size_t index = 0;
  for (; index < free.size() && free.time(index) <= *two.safe_horizon; ++index) {
    prefix.append(free.time(index), free.field(index));
  }
  if (*two.safe_horizon > 0.0) { EXPECT_LE(etnu_norm(prefix, cfg) / calib.mu0_empirical, 1.0); }
  EXPECT_GT(*two.next_node_margin, 1.0);
  prefix.append(free.time(index), free.field(index));
  EXPECT_NEAR(etnu_norm(prefix, cfg) / calib.mu0_empirical, *two.next_node_margin, 1e-14);

  CalibrationRecord bad;
  EXPECT_THROW(smallness_check(theta0, cfg, tg, bad), std::invalid_argument);
}

TEST(Calibration, SmallProblemCrossesOneHalf) {
  CalibrationSpec spec;
  spec.n = 16;
  spec.intervals = 8;
  spec.seeds = {1, 2};
  spec.bisection_steps = 6;
  const CalibrationRecord record = calibrate_mu0(spec);
  EXPECT_NO_THROW(record.validate());
  EXPECT_LE(record.max_contraction, 0.5);
  EXPECT_GT(record.amplitude, 0.0);
  const SolverConfig cfg(spec.alpha);
  const Grid2D grid(spec.n);
  const TimeGrid tg(spec.horizon, spec.intervals, spec.gamma);
  double above = 0.0;
  for (std::uint64_t seed : spec.seeds) {
    const RealField f = random_bandlimited(grid, {seed, spec.k_min, spec.k_max, 1.5 * record.amplitude});
    above = std::max(above, observed_contraction(f, cfg, tg, spec.probe_iterations));
  }
  EXPECT_GT(above, 0.5);
}

}  // namespace
}  // namespace qg
