#include "hausdim/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "hausdim/error.hpp"
#include "hausdim/maps.hpp"

namespace hausdim::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + s + "'");
  }
  return v;
}

int to_int(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': '" + s + "'");
  }
  return v;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::kCantor:
      return "cantor";
    case Command::kPerturbed:
      return "perturbed";
    case Command::kComplex:
      return "complex";
    case Command::kReproduce:
      return "reproduce";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  if (name == "cantor") return Command::kCantor;
  if (name == "perturbed") return Command::kPerturbed;
  if (name == "complex") return Command::kComplex;
  if (name == "reproduce") return Command::kReproduce;
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

double RunConfig::effective_h() const {
  if (h) return *h;
  return command == Command::kComplex ? 0.02 : 1e-4;
}

int RunConfig::effective_depth() const {
  return depth.value_or(0);
}

std::vector<int> parse_digit_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    out.push_back(to_int("digits", piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

RunConfig default_config() {
  RunConfig c;
  if (const char* env = std::getenv("HAUSDIM_JOBS"); env != nullptr && *env != '\0') {
    c.jobs = to_int("HAUSDIM_JOBS", env);
  }
  return c;
}

void apply_setting(RunConfig& c, std::string_view raw_key, std::string_view value) {
  std::string key = trim(raw_key);
  std::replace(key.begin(), key.end(), '_', '-');
  const std::string v = trim(value);
  if (key == "command") {
    c.command = parse_command(v);
  } else if (key == "digits") {
    c.digits = parse_digit_list(v);
  } else if (key == "lambda") {
    c.lambda = to_double(key, v);
  } else if (key == "set") {
    c.set = v;
  } else if (key == "h") {
    c.h = to_double(key, v);
  } else if (key == "R" || key == "r" || key == "radius") {
    c.radius = to_double(key, v);
  } else if (key == "tol-s") {
    c.tol_s = to_double(key, v);
  } else if (key == "tol-eig") {
    c.tol_eig = to_double(key, v);
  } else if (key == "margin-rings") {
    c.margin_rings = to_int(key, v);
  } else if (key == "safety-factor") {
    c.safety_factor = to_double(key, v);
  } else if (key == "depth") {
    c.depth = to_int(key, v);
  } else if (key == "out") {
    c.out = v;
  } else if (key == "format") {
    if (v == "json") {
      c.format = OutputFormat::kJson;
    } else if (v == "csv") {
      c.format = OutputFormat::kCsv;
    } else {
      throw ConfigError("format must be json or csv, got '" + v + "'");
    }
  } else if (key == "jobs") {
    c.jobs = to_int(key, v);
  } else if (key == "ledger") {
    c.ledger = v;
  } else if (key == "dump-matrix") {
    c.dump_matrix = v;
  } else if (key == "table") {
    c.table = v;
  } else if (key == "filter") {
    c.filter = v;
  } else if (key == "budget") {
    c.budget = to_double(key, v);
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    apply_setting(config, t.substr(0, eq), t.substr(eq + 1));
  }
}

void validate(const RunConfig& c) {
  const double h = c.effective_h();
  if (!(h > 0.0)) throw ConfigError("h must be positive");
  if (!(c.tol_s > 0.0)) throw ConfigError("tol-s must be positive");
  if (!(c.tol_eig > 0.0)) throw ConfigError("tol-eig must be positive");
  if (!(c.radius > 0.0)) throw ConfigError("R must be positive");
  if (!(c.safety_factor >= 1.0)) throw ConfigError("safety-factor must be >= 1");
  if (c.margin_rings < 0) throw ConfigError("margin-rings must be nonnegative");
  if (c.effective_depth() < 0) throw ConfigError("depth must be nonnegative");
  if (c.jobs < 1) throw ConfigError("jobs must be positive");
  if (!(c.budget > 0.0)) throw ConfigError("budget must be positive");
  switch (c.command) {
    case Command::kCantor:
      if (c.digits.empty()) throw ConfigError("digits must be nonempty");
      break;
    case Command::kPerturbed:
      if (!(c.lambda >= 0.0 && c.lambda <= 1.0)) throw ConfigError("lambda must lie in [0,1]");
      break;
    case Command::kComplex: {
      (void)parse_digit_set(c.set);
      const double n = std::round(1.0 / h);
      if (h > 1.0 || std::abs(1.0 / h - n) > 1e-12 / h) {
        throw ConfigError("h must be of the form 1/N for complex sets");
      }
      break;
    }
    case Command::kReproduce:
      if (c.table != "t1" && c.table != "t3" && c.table != "t4") {
        throw ConfigError("table must be t1, t3 or t4");
      }
      break;
  }
}

}  // namespace hausdim::cli
