#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qg/field.hpp"
#include "qg/run_config.hpp"

namespace qg {

enum class Stage { kSimulate, kPicard, kProbe, kVerify, kCalibrateMu0 };

inline constexpr int kExitOk = 0;
inline constexpr int kExitProbeFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

/// Probe names accepted by `probe <name>`.
const std::vector<std::string>& probe_names();

RealField initial_field(const RunConfig& cfg);

/// Runs one stage and writes its artifacts into cfg.output_dir. Progress goes
/// to `log`, diagnostics to `err`. Returns one of the kExit* codes.
int run(const RunConfig& cfg, Stage stage, const std::string& probe, std::ostream& log,
        std::ostream& err);

}  // namespace qg
