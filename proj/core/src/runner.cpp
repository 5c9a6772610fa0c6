#include "qg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qg/filter_bank.hpp"
#include "qg/mild.hpp"
#include "qg/norms.hpp"
#include "qg/probes.hpp"
#include "qg/random_field.hpp"
#include "qg/snapshot.hpp"
#include "qg/special.hpp"

namespace qg {
namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

TrackedNorm parse_norm(const std::string& token) {
  if (token == "Btilde") return TrackedNorm::btilde();
  if (token[0] == 'L') {
    const std::string p = token.substr(1);
    return TrackedNorm::lebesgue(p == "inf" ? kInfinity : std::stod(p));
  }
  const auto colon = token.find(':');
  std::vector<double> values;
  std::stringstream stream(token.substr(colon + 1));
  std::string item;
  while (std::getline(stream, item, ':')) values.push_back(item == "inf" ? kInfinity : std::stod(item));
  return TrackedNorm::besov_norm({values.at(0), values.at(1), values.at(2),
                                  token.substr(0, colon) == "Bdot"});
}

std::vector<TrackedNorm> tracked_norms(const RunConfig& cfg) {
  std::vector<TrackedNorm> out;
  for (const std::string& token : cfg.norms) out.push_back(parse_norm(token));
  return out;
}

void write_manifest(const fs::path& path, const Trajectory& traj, double dt) {
  std::ofstream out = open_output(path);
  out << "step,time,linf,l2,riesz_linf,mean\n";
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const RealField& f = traj.field(m);
    const long step = dt > 0.0 ? std::lround(traj.time(m) / dt) : static_cast<long>(m);
    out << step << ',' << format_number(traj.time(m)) << ',' << format_number(linf_norm(f))
        << ',' << format_number(lp_norm(f, 2.0)) << ','
        << format_number(riesz_perp_lp_norm(f, kInfinity)) << ',' << format_number(mean(f))
        << '\n';
  }
}

void write_etnu(const fs::path& path, const Trajectory& traj, const SolverConfig& solver) {
  std::ofstream out = open_output(path);
  out << "time,weighted,partial_sup\n";
  const std::vector<double> profile = etnu_profile(traj, solver);
  double running = 0.0;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    running = std::max(running, profile[m]);
    out << format_number(traj.time(m)) << ',' << format_number(profile[m]) << ','
        << format_number(running) << '\n';
  }
}

void write_snapshots(const fs::path& dir, const Trajectory& traj, int every) {
  if (every <= 0) return;
  fs::create_directories(dir / "snapshots");
  for (std::size_t m = 0; m < traj.size(); ++m) {
    if (m % static_cast<std::size_t>(every) != 0 && m + 1 != traj.size()) continue;
    char name[32];
    std::snprintf(name, sizeof(name), "node_%06zu.qgf", m);
    write_snapshot(dir / "snapshots" / name, traj.field(m));
  }
}

void write_series(const fs::path& path, const ProbeReport& report) {
  std::ofstream out = open_output(path);
  out << "x,y\n";
  for (const auto& [x, y] : report.series) out << format_number(x) << ',' << format_number(y) << '\n';
}

Trajectory simulate(const RunConfig& cfg, const RealField& theta0, double horizon) {
  const int steps = std::max(1, static_cast<int>(std::lround(horizon / cfg.time_dt)));
  EtdOptions options;
  options.record_every = cfg.output_record_every;
  return evolve_etd(theta0, cfg.solver(), cfg.time_dt, steps, options);
}

double simulation_horizon(const RunConfig& cfg) { return cfg.time_steps * cfg.time_dt; }

std::vector<ProbeReport> kernel_reports(const RunConfig& cfg) {
  const std::vector<double> times = dyadic_points(std::ldexp(1.0, -8), std::ldexp(1.0, -2), 1);
  std::vector<ProbeReport> out;
  for (double r : {1.0, 2.0, kInfinity}) out.push_back(kernel_exponent_probe(cfg.alpha, r, times));
  return out;
}

std::vector<double> bilinear_horizons() {
  return dyadic_points(std::ldexp(1.0, -6), std::ldexp(1.0, -1), 1);
}

ProbeReport gronwall_report() {
  const GronwallParams params{1.0, 1.0, 0.5};
  return gronwall_probe(params, solve_volterra_equality(params, 1.0, 2000));
}

std::vector<ProbeReport> run_named_probe(const RunConfig& cfg, const std::string& name,
                                         const RealField& theta0, const fs::path& dir) {
  const SolverConfig solver = cfg.solver();
  if (name == "kernel") return kernel_reports(cfg);
  if (name == "gronwall") return {gronwall_report()};
  if (name == "bilinear" || name == "bilinear-critical") {
    const Grid2D grid(cfg.probe_bilinear_n);
    const auto [u, v] = default_bump_pair(grid, solver);
    if (name == "bilinear") return {bilinear_estimate_probe(u, v, solver, cfg.probe_p, bilinear_horizons())};
    return {critical_bilinear_probe(u, v, solver, bilinear_horizons())};
  }
  if (name == "convergence") {
    PicardOptions options;
    options.max_iter = cfg.picard_max_iter;
    options.tol = cfg.picard_tol;
    const PicardResult result = picard_iterate(
        theta0, solver, TimeGrid(cfg.time_horizon, cfg.time_intervals, cfg.time_gamma), options);
    return {convergence_diagnostic(result.diff_norms, result.iterate_norms, 0.5, {})};
  }

  const double horizon = simulation_horizon(cfg);
  const Trajectory traj = simulate(cfg, theta0, horizon);
  if (name == "max-principle") return {max_principle_report(traj)};
  if (name == "riesz-growth") return {riesz_growth_report(traj, solver)};
  if (name == "blowup") {
    const double t_star = cfg.probe_t_star > 0.0 ? cfg.probe_t_star : 2.0 * horizon;
    return {blowup_lower_bound_probe(traj, solver, t_star)};
  }
  const FilterBank bank = build_filter_bank(theta0.grid());
  if (name == "persistence") {
    const PersistenceReport persistence =
        persistence_tracker(traj, tracked_norms(cfg), bank, solver, cfg.probe_ceiling);
    std::ofstream out = open_output(dir / "persistence.csv");
    persistence.write_csv(out);
    ProbeReport report;
    report.name = "persistence";
    report.expected = cfg.probe_ceiling;
    report.tolerance = cfg.probe_ceiling;
    report.measured = *std::max_element(persistence.growth.begin(), persistence.growth.end());
    report.deviation = report.measured;
    report.pass = persistence.pass;
    report.notes = "measured = largest max/initial ratio over the tracked norms";
    return {report};
  }
  if (name == "fluctuation") {
    return {fluctuation_regularity_probe(theta0, traj, solver, bank, 2.0, traj.size() - 1)};
  }
  throw std::invalid_argument("unknown probe '" + name + "'");
}

int finish_probes(const std::vector<ProbeReport>& reports, const fs::path& dir,
                  const std::string& file, std::ostream& log) {
  std::ofstream out = open_output(dir / file);
  write_probe_csv(out, reports);
  for (const ProbeReport& r : reports) {
    if (!r.series.empty()) write_series(dir / ("series_" + r.name + ".csv"), r);
  }
  write_probe_summary(log, reports);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const ProbeReport& r) { return r.pass || r.skipped; });
  return ok ? kExitOk : kExitProbeFailed;
}

int stage_simulate(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
  const RealField theta0 = initial_field(cfg);
  const Trajectory traj = simulate(cfg, theta0, simulation_horizon(cfg));
  const SolverConfig solver = cfg.solver();
  write_manifest(dir / "manifest.csv", traj, cfg.time_dt);
  write_etnu(dir / "etnu.csv", traj, solver);
  write_snapshots(dir, traj, cfg.output_snapshot_every);
  const FilterBank bank = build_filter_bank(theta0.grid());
  std::ofstream norms = open_output(dir / "norms.csv");
  persistence_tracker(traj, tracked_norms(cfg), bank, solver, cfg.probe_ceiling).write_csv(norms);
  log << "simulate: " << cfg.time_steps << " steps to t = "
      << format_number(traj.times().back())
      << ", ||theta||_inf = " << format_number(linf_norm(traj.back())) << '\n';
  return kExitOk;
}

int stage_picard(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
  const RealField theta0 = initial_field(cfg);
  const SolverConfig solver = cfg.solver();
  const TimeGrid tg(cfg.time_horizon, cfg.time_intervals, cfg.time_gamma);
  PicardOptions options;
  options.max_iter = cfg.picard_max_iter;
  options.tol = cfg.picard_tol;
  if (cfg.picard_mu0 > 0.0) {
    CalibrationRecord calib;
    calib.mu0_empirical = cfg.picard_mu0;
    options.calibration = calib;
    const SmallnessReport small = smallness_check(theta0, solver, tg, calib);
    log << "picard: smallness margin " << format_number(small.margin);
    if (small.safe_horizon) log << " (exceeded; safe horizon " << format_number(*small.safe_horizon) << ")";
    log << '\n';
  }
  const PicardResult result = picard_iterate(theta0, solver, tg, options);
  {
    std::ofstream out = open_output(dir / "picard.csv");
    out << "iteration,iterate_norm,diff_norm\n";
    for (std::size_t n = 0; n < result.iterate_norms.size(); ++n) {
      out << n << ',' << format_number(result.iterate_norms[n]) << ','
          << (n < result.diff_norms.size() ? format_number(result.diff_norms[n]) : "") << '\n';
    }
  }
  write_manifest(dir / "manifest.csv", result.limit, 0.0);
  write_etnu(dir / "etnu.csv", result.limit, solver);
  write_snapshots(dir, result.limit, cfg.output_snapshot_every);
  log << "picard: " << result.diff_norms.size() << " iterations, "
      << (result.converged ? "converged" : result.diverged ? "diverged" : "not converged")
      << ", residual " << format_number(result.residual) << '\n';
  return result.converged ? kExitOk : kExitProbeFailed;
}

int stage_verify(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
  const RealField theta0 = initial_field(cfg);
  std::vector<ProbeReport> reports = kernel_reports(cfg);
  for (const char* name : {"bilinear", "bilinear-critical", "max-principle", "persistence"}) {
    for (ProbeReport& r : run_named_probe(cfg, name, theta0, dir)) reports.push_back(std::move(r));
  }
  reports.push_back(gronwall_report());
  return finish_probes(reports, dir, "verify.csv", log);
}

int stage_calibrate(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
  CalibrationSpec spec;
  spec.alpha = cfg.alpha;
  spec.n = cfg.grid_n;
  spec.period = cfg.grid_period;
  spec.horizon = cfg.time_horizon;
  spec.intervals = cfg.time_intervals;
  spec.gamma = cfg.time_gamma;
  if (cfg.init_seed) {
    spec.seeds.clear();
    for (std::uint64_t k = 0; k < 5; ++k) spec.seeds.push_back(*cfg.init_seed + k);
  }
  spec.k_min = cfg.init_k_min;
  spec.k_max = cfg.init_k_max;
  const CalibrationRecord record = calibrate_mu0(spec);
  std::ofstream out = open_output(dir / "calibration.csv");
  out << "mu0_empirical,alpha,amplitude,max_contraction,n,L,T,M,gamma\n"
      << format_number(record.mu0_empirical) << ',' << format_number(record.alpha) << ','
      << format_number(record.amplitude) << ',' << format_number(record.max_contraction) << ','
      << record.n << ',' << format_number(record.period) << ',' << format_number(record.horizon)
      << ',' << record.intervals << ',' << format_number(record.gamma) << '\n';
  log << "calibrate-mu0: mu0_empirical = " << format_number(record.mu0_empirical)
      << " at amplitude " << format_number(record.amplitude) << '\n';
  return kExitOk;
}

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::kSimulate:
      return "simulate";
    case Stage::kPicard:
      return "picard";
    case Stage::kProbe:
      return "probe";
    case Stage::kVerify:
      return "verify";
    case Stage::kCalibrateMu0:
      return "calibrate-mu0";
  }
  return "unknown";
}

}  // namespace

const std::vector<std::string>& probe_names() {
  static const std::vector<std::string> names = {
      "kernel",   "bilinear",    "bilinear-critical", "max-principle", "riesz-growth",
      "blowup",   "gronwall",    "persistence",       "fluctuation",   "convergence"};
  return names;
}

RealField initial_field(const RunConfig& cfg) {
  const Grid2D grid = cfg.grid();
  switch (cfg.init_preset) {
    case InitPreset::kZero:
      return RealField(grid);
    case InitPreset::kCosX:
      return RealField::from_function(grid, [](double x, double) { return std::cos(x); });
    case InitPreset::kRandom:
      return random_bandlimited(grid, {cfg.init_seed.value(), cfg.init_k_min, cfg.init_k_max,
                                       cfg.init_amplitude});
    case InitPreset::kFile: {
      Snapshot snap = read_snapshot(cfg.init_path);
      if (std::holds_alternative<SpectralField>(snap)) {
        throw std::invalid_argument("init.path: spectral snapshots are not accepted as data");
      }
      RealField field = std::get<RealField>(std::move(snap));
      if (field.grid().n() != grid.n() || field.grid().period() != grid.period()) {
        throw std::invalid_argument("init.path: snapshot grid does not match grid.n / grid.L");
      }
      RealField out(grid);
      std::copy(field.samples().begin(), field.samples().end(), out.samples().begin());
      return out;
    }
  }
  throw std::logic_error("initial_field: unknown preset");
}

int run(const RunConfig& cfg, Stage stage, const std::string& probe, std::ostream& log,
        std::ostream& err) {
  try {
    cfg.validate();
  } catch (const ConfigError& bad) {
    err << "config error: " << bad.what() << '\n';
    return kExitConfigError;
  }
  if (stage == Stage::kProbe &&
      std::find(probe_names().begin(), probe_names().end(), probe) == probe_names().end()) {
    err << "config error: probe: unknown probe '" << probe << "'\n";
    return kExitConfigError;
  }
  const fs::path dir(cfg.output_dir);
  try {
    fs::create_directories(dir);
    std::ofstream echo = open_output(dir / "config.echo");
    echo << echo_config(cfg);
  } catch (const std::exception& bad) {
    err << "error: " << bad.what() << '\n';
    return kExitRuntimeError;
  }
  try {
    switch (stage) {
      case Stage::kSimulate:
        return stage_simulate(cfg, dir, log);
      case Stage::kPicard:
        return stage_picard(cfg, dir, log);
      case Stage::kProbe:
        return finish_probes(run_named_probe(cfg, probe, initial_field(cfg), dir), dir,
                             "probe_" + probe + ".csv", log);
      case Stage::kVerify:
        return stage_verify(cfg, dir, log);
      case Stage::kCalibrateMu0:
        return stage_calibrate(cfg, dir, log);
    }
  } catch (const std::exception& bad) {
    err << "stage " << stage_name(stage) << " failed: " << bad.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitRuntimeError;
}

}  // namespace qg
