#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qg/run_config.hpp"
#include "qg/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral solver and estimate probes for dissipative QG"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::string deterministic;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "seed for the random preset");
  app.add_option("--deterministic", deterministic, "true|false");
  app.add_option("--set", overrides, "key=value override (repeatable)");

  auto* simulate = app.add_subcommand("simulate", "ETD evolution with manifest and snapshots");
  auto* picard = app.add_subcommand("picard", "Picard iteration of the mild equation");
  auto* probe = app.add_subcommand("probe", "run one estimate probe");
  std::string probe_name;
  probe->add_option("name", probe_name, "probe name")->required();
  auto* verify = app.add_subcommand("verify", "default exponent and bound probes");
  auto* calibrate = app.add_subcommand("calibrate-mu0", "calibrate the smallness threshold");
  for (CLI::App* sub : {simulate, picard, probe, verify, calibrate}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  qg::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = qg::load_config(config_path);
    if (app.count("--seed")) cfg.init_seed = seed;
    if (!deterministic.empty()) qg::apply_override(cfg, "run.deterministic=" + deterministic);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    for (const std::string& assignment : overrides) qg::apply_override(cfg, assignment);
  } catch (const qg::ConfigError& bad) {
    std::cerr << "config error: " << bad.what() << '\n';
    return qg::kExitConfigError;
  }

  qg::Stage stage = qg::Stage::kSimulate;
  if (*picard) stage = qg::Stage::kPicard;
  if (*probe) stage = qg::Stage::kProbe;
  if (*verify) stage = qg::Stage::kVerify;
  if (*calibrate) stage = qg::Stage::kCalibrateMu0;
  return qg::run(cfg, stage, probe_name, std::cout, std::cerr);
}
