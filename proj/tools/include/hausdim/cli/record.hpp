#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hausdim/cli/config.hpp"
#include "hausdim/solver.hpp"

namespace hausdim::cli {

struct BracketSummary {
  double s_lower = 0.0;
  double s_upper = 0.0;
  double cert_lower = 0.0;  // cw_lower(A) at s_lower
  double cert_upper = 0.0;  // cw_upper(B) at s_upper
  double root_a = 0.0;
  double root_b = 0.0;
  double h = 0.0;
  std::optional<double> radius;
  std::optional<double> tail_constant;
  int evaluations = 0;

  friend bool operator==(const BracketSummary&, const BracketSummary&) = default;
};

[[nodiscard]] BracketSummary summarize(const DimensionBracket& b);

/// Comparison against a reference row (reproduce only).
struct GoldenCheck {
  std::string table;
  std::string row;
  double expected_lower = 0.0;
  double expected_upper = 0.0;
  double tolerance = 0.0;
  std::string verdict;  // pass | fail | skipped

  friend bool operator==(const GoldenCheck&, const GoldenCheck&) = default;
};

struct ResultRecord {
  RunConfig config;
  std::string problem;
  std::string status;  // certified | failed | skipped
  std::string message;
  std::optional<BracketSummary> bracket;
  std::optional<double> best_estimate;  // set when certification failed
  std::optional<GoldenCheck> check;
  double seconds = 0.0;
  std::string version;
  std::string timestamp;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const ResultRecord& r);
void from_json(const nlohmann::json& j, ResultRecord& r);

/// Current UTC time, ISO 8601 to the second.
[[nodiscard]] std::string utc_timestamp();

[[nodiscard]] std::string csv_header();
/// One line, reals with 17 significant digits.
[[nodiscard]] std::string csv_row(const ResultRecord& r);

/// A single record is written as a JSON object, several as an array.
void write_records(const std::vector<ResultRecord>& records, OutputFormat format, std::ostream& out);
void append_ledger(const std::filesystem::path& path, const std::vector<ResultRecord>& records);

}  // namespace hausdim::cli
