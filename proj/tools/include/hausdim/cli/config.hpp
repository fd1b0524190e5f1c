#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hausdim::cli {

enum class Command { kCantor, kPerturbed, kComplex, kReproduce };
enum class OutputFormat { kJson, kCsv };

[[nodiscard]] std::string command_name(Command c);
[[nodiscard]] Command parse_command(std::string_view name);

/// Everything a run needs. Unset optionals take per-command defaults:
/// h = 1e-4 in 1D and 0.02 in 2D, depth = 0 (mesh all of [0,1]).
struct RunConfig {
  Command command = Command::kCantor;
  std::vector<int> digits{1, 2};
  double lambda = 0.0;
  std::string set = "I3";
  std::optional<double> h;
  double radius = 100.0;
  double tol_s = 1e-12;
  double tol_eig = 1e-12;
  int margin_rings = 1;
  double safety_factor = 1.0 + 1e-12;
  std::optional<int> depth;
  std::string out;  // empty: stdout
  OutputFormat format = OutputFormat::kJson;
  int jobs = 1;
  std::string ledger;       // NDJSON file appended to, when set
  std::string dump_matrix;  // coordinate dump of A and B at s_upper, when set
  std::string table = "t3";
  std::string filter;
  double budget = 120.0;  // seconds of estimated cost per reproduce row

  [[nodiscard]] double effective_h() const;
  [[nodiscard]] int effective_depth() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Built-in defaults, with HAUSDIM_JOBS (when set) as the jobs default.
[[nodiscard]] RunConfig default_config();

/// Applies one key=value setting. Keys are the long flag names without the
/// leading dashes; '_' and '-' are interchangeable. Throws ConfigError.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Reads a flat key=value file; blank lines and lines starting with '#' are
/// ignored.
void load_config_file(RunConfig& config, const std::filesystem::path& path);

/// Range checks (positive numerics, 1/N mesh size for 2D, known set/table).
void validate(const RunConfig& config);

[[nodiscard]] std::vector<int> parse_digit_list(std::string_view text);

}  // namespace hausdim::cli
