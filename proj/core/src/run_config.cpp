#include "qg/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "qg/norms.hpp"

namespace qg {
namespace {

struct BadValue {
  std::string message;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& text) {
  if (text == "inf") return kInfinity;
  if (text == "pi") return std::numbers::pi;
  if (text == "2pi") return 2.0 * std::numbers::pi;
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw BadValue{"expected a number, got '" + text + "'"};
  }
  return value;
}

template <typename Int>
Int to_integer(const std::string& text) {
  Int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw BadValue{"expected an integer, got '" + text + "'"};
  }
  return value;
}

bool to_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw BadValue{"expected true or false, got '" + text + "'"};
}

std::vector<std::string> to_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

InitPreset to_preset(const std::string& text) {
  if (text == "zero") return InitPreset::kZero;
  if (text == "cosx") return InitPreset::kCosX;
  if (text == "random") return InitPreset::kRandom;
  if (text == "file") return InitPreset::kFile;
  throw BadValue{"unknown preset '" + text + "' (zero, cosx, random, file)"};
}

struct Field {
  std::string key;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

Field real_field(std::string key, double RunConfig::*member) {
  return {std::move(key), [member](RunConfig& c, const std::string& v) { c.*member = to_double(v); },
          [member](const RunConfig& c) { return format_number(c.*member); }};
}

Field int_field(std::string key, int RunConfig::*member) {
  return {std::move(key),
          [member](RunConfig& c, const std::string& v) { c.*member = to_integer<int>(v); },
          [member](const RunConfig& c) { return std::to_string(c.*member); }};
}

Field string_field(std::string key, std::string RunConfig::*member) {
  return {std::move(key), [member](RunConfig& c, const std::string& v) { c.*member = v; },
          [member](const RunConfig& c) { return c.*member; }};
}

Field list_field(std::string key, std::vector<std::string> RunConfig::*member) {
  return {std::move(key), [member](RunConfig& c, const std::string& v) { c.*member = to_list(v); },
          [member](const RunConfig& c) { return join(c.*member); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      real_field("alpha", &RunConfig::alpha),
      int_field("grid.n", &RunConfig::grid_n),
      real_field("grid.L", &RunConfig::grid_period),
      real_field("grid.dealias", &RunConfig::grid_dealias),
      real_field("time.T", &RunConfig::time_horizon),
      int_field("time.M", &RunConfig::time_intervals),
      real_field("time.gamma", &RunConfig::time_gamma),
      real_field("time.dt", &RunConfig::time_dt),
      int_field("time.n_steps", &RunConfig::time_steps),
      {"init.preset", [](RunConfig& c, const std::string& v) { c.init_preset = to_preset(v); },
       [](const RunConfig& c) { return preset_name(c.init_preset); }},
      {"init.seed",
       [](RunConfig& c, const std::string& v) { c.init_seed = to_integer<std::uint64_t>(v); },
       [](const RunConfig& c) { return c.init_seed ? std::to_string(*c.init_seed) : ""; }},
      real_field("init.k_min", &RunConfig::init_k_min),
      real_field("init.k_max", &RunConfig::init_k_max),
      real_field("init.amplitude", &RunConfig::init_amplitude),
      string_field("init.path", &RunConfig::init_path),
      list_field("norms", &RunConfig::norms),
      list_field("probes", &RunConfig::probes),
      string_field("output.dir", &RunConfig::output_dir),
      int_field("output.record_every", &RunConfig::output_record_every),
      int_field("output.snapshot_every", &RunConfig::output_snapshot_every),
      int_field("picard.max_iter", &RunConfig::picard_max_iter),
      real_field("picard.tol", &RunConfig::picard_tol),
      real_field("picard.mu0", &RunConfig::picard_mu0),
      real_field("probe.p", &RunConfig::probe_p),
      real_field("probe.t_star", &RunConfig::probe_t_star),
      real_field("probe.ceiling", &RunConfig::probe_ceiling),
      int_field("probe.bilinear_n", &RunConfig::probe_bilinear_n),
      {"run.deterministic",
       [](RunConfig& c, const std::string& v) { c.deterministic = to_bool(v); },
       [](const RunConfig& c) { return std::string(c.deterministic ? "true" : "false"); }},
  };
  return table;
}

const Field& lookup(const std::string& key, const std::string& source, int line) {
  for (const Field& f : fields()) {
    if (f.key == key) return f;
  }
  throw ConfigError(source, line, key, "unknown key");
}

void assign(RunConfig& cfg, const std::string& key, const std::string& value,
            const std::string& source, int line) {
  const Field& field = lookup(key, source, line);
  try {
    field.set(cfg, value);
  } catch (const BadValue& bad) {
    throw ConfigError(source, line, key, bad.message);
  }
}

void check(bool ok, const char* field, const std::string& message) {
  if (!ok) throw ConfigError("<config>", 0, field, message);
}

void validate_norm_token(const std::string& token) {
  if (token == "Btilde") return;
  try {
    if (token.size() > 1 && token[0] == 'L') {
      const double p = to_double(token.substr(1));
      check(p >= 1.0, "norms", "Lebesgue exponent must be >= 1 in '" + token + "'");
      return;
    }
    const auto colon = token.find(':');
    if (colon != std::string::npos) {
      const std::string head = token.substr(0, colon);
      const std::vector<std::string> parts = [&] {
        std::vector<std::string> out;
        std::stringstream stream(token.substr(colon + 1));
        std::string item;
        while (std::getline(stream, item, ':')) out.push_back(item);
        return out;
      }();
      if ((head == "B" || head == "Bdot") && parts.size() == 3) {
        BesovSpec{to_double(parts[0]), to_double(parts[1]), to_double(parts[2]), head == "Bdot"}
            .validate();
        return;
      }
    }
  } catch (const BadValue& bad) {
    throw ConfigError("<config>", 0, "norms", bad.message + " in '" + token + "'");
  } catch (const std::invalid_argument& bad) {
    throw ConfigError("<config>", 0, "norms", std::string(bad.what()) + " in '" + token + "'");
  }
  throw ConfigError("<config>", 0, "norms", "unrecognized norm '" + token + "'");
}

}  // namespace

ConfigError::ConfigError(std::string source, int line, std::string field,
                         const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") + ": " + field +
                         ": " + message),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

std::string preset_name(InitPreset preset) {
  switch (preset) {
    case InitPreset::kZero:
      return "zero";
    case InitPreset::kCosX:
      return "cosx";
    case InitPreset::kRandom:
      return "random";
    case InitPreset::kFile:
      return "file";
  }
  return "unknown";
}

void RunConfig::validate() const {
  check(alpha > 0.5 && alpha < 1.0, "alpha", "must lie in (1/2, 1)");
  try {
    grid();
  } catch (const std::invalid_argument& bad) {
    throw ConfigError("<config>", 0, "grid", bad.what());
  }
  check(grid_dealias > 0.0 && grid_dealias <= 1.0, "grid.dealias", "must lie in (0, 1]");
  check(time_horizon > 0.0 && std::isfinite(time_horizon), "time.T", "must be positive");
  check(time_intervals >= 1, "time.M", "must be >= 1");
  check(time_gamma >= 1.0, "time.gamma", "must be >= 1");
  check(time_dt > 0.0, "time.dt", "must be positive");
  check(time_steps >= 1, "time.n_steps", "must be >= 1");
  if (init_preset == InitPreset::kRandom) {
    check(init_seed.has_value(), "init.seed", "mandatory for the random preset");
    check(init_k_min >= 0.0 && init_k_min <= init_k_max, "init.k_min", "must satisfy 0 <= k_min <= k_max");
    check(init_k_max < grid_n / 2, "init.k_max", "must be below n/2");
    check(init_amplitude >= 0.0, "init.amplitude", "must be nonnegative");
  }
  if (init_preset == InitPreset::kFile) {
    check(!init_path.empty(), "init.path", "mandatory for the file preset");
  }
  for (const std::string& token : norms) validate_norm_token(token);
  check(!output_dir.empty(), "output.dir", "must not be empty");
  check(output_record_every >= 1, "output.record_every", "must be >= 1");
  check(output_snapshot_every >= 0, "output.snapshot_every", "must be >= 0");
  check(picard_max_iter >= 1, "picard.max_iter", "must be >= 1");
  check(picard_tol > 0.0, "picard.tol", "must be positive");
  check(picard_mu0 >= 0.0, "picard.mu0", "must be nonnegative");
  check(probe_p > solver().p_c(), "probe.p", "must exceed p_c");
  check(probe_t_star >= 0.0, "probe.t_star", "must be nonnegative");
  check(probe_ceiling > 1.0, "probe.ceiling", "must exceed 1");
  try {
    Grid2D{probe_bilinear_n};
  } catch (const std::invalid_argument& bad) {
    throw ConfigError("<config>", 0, "probe.bilinear_n", bad.what());
  }
}

RunConfig parse_config(const std::string& text, const std::string& source) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::stringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const std::string content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line, content, "expected key = value");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(source, line, key, "duplicate key");
    if (value.empty() && key != "init.seed" && key != "probes" && key != "norms" &&
        key != "init.path") {
      throw ConfigError(source, line, key, "missing value");
    }
    if (key == "init.seed" && value.empty()) {
      lookup(key, source, line);
      cfg.init_seed.reset();
      continue;
    }
    assign(cfg, key, value, source, line);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "--config", "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("--set", 0, assignment, "expected key=value");
  }
  assign(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)), "--set", 0);
}

std::string echo_config(const RunConfig& cfg) {
  const SolverConfig solver = cfg.solver();
  std::ostringstream out;
  out << "# resolved configuration\n"
      << "# derived: nu = " << format_number(solver.nu())
      << ", p_c = " << format_number(solver.p_c())
      << ", s_c = " << format_number(solver.s_c()) << '\n';
  for (const Field& f : fields()) out << f.key << " = " << f.get(cfg) << '\n';
  return out.str();
}

}  // namespace qg
