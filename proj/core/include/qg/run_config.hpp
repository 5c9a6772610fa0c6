#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qg/grid.hpp"

namespace qg {

/// Invalid configuration. `line` is 0 for errors that are not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, int line, std::string field, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  int line_;
  std::string field_;
};

enum class InitPreset { kZero, kCosX, kRandom, kFile };

struct RunConfig {
  double alpha = 0.75;

  int grid_n = 128;
  double grid_period = 6.283185307179586;
  double grid_dealias = 2.0 / 3.0;

  double time_horizon = 1.0;
  int time_intervals = 32;
  double time_gamma = 2.0;
  double time_dt = 1e-3;
  int time_steps = 1000;

  InitPreset init_preset = InitPreset::kCosX;
  std::optional<std::uint64_t> init_seed;
  double init_k_min = 1.0;
  double init_k_max = 4.0;
  double init_amplitude = 0.1;
  std::string init_path;

  /// Norm tokens: L<p> (L2, Linf, ...), Bdot:s:p:q, B:s:p:q, Btilde.
  std::vector<std::string> norms{"L2", "Linf"};
  std::vector<std::string> probes;

  std::string output_dir = "qgmild_out";
  int output_record_every = 10;
  int output_snapshot_every = 10;

  int picard_max_iter = 50;
  double picard_tol = 1e-10;
  /// Calibrated smallness threshold; 0 disables the smallness check.
  double picard_mu0 = 0.0;

  double probe_p = 8.0;
  double probe_t_star = 0.0;  ///< 0 means 2 T
  double probe_ceiling = 10.0;
  int probe_bilinear_n = 512;

  bool deterministic = true;

  SolverConfig solver() const { return SolverConfig(alpha); }
  Grid2D grid() const { return Grid2D(grid_n, grid_period, grid_dealias); }

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parses `key = value` lines; '#' starts a comment. Unknown keys, malformed
/// values and duplicate keys raise ConfigError with the line number.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Applies one `key=value` override on top of cfg.
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Fully resolved configuration; derived quantities appear as comments so the
/// text parses back to the same RunConfig.
std::string echo_config(const RunConfig& cfg);

std::string preset_name(InitPreset preset);

}  // namespace qg
