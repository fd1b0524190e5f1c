#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hausdim/cli/config.hpp"

namespace hausdim::cli {

/// A reference bracket and how to recompute it.
struct GoldenRow {
  std::string table;  // t1 | t3 | t4
  std::string label;  // E[1,2], lambda=0.5, I1 ...
  Command command = Command::kCantor;
  std::vector<int> digits;
  double lambda = 0.0;
  std::string set;
  double h = 0.0;
  double radius = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double tolerance = 0.0;  // per endpoint, absolute
};

[[nodiscard]] const std::vector<GoldenRow>& golden_rows();

/// Rows of `table` whose label contains `filter` (all rows when empty).
[[nodiscard]] std::vector<GoldenRow> select_rows(std::string_view table, std::string_view filter);

/// Rough single-core cost of recomputing a row, in seconds.
[[nodiscard]] double estimated_seconds(const GoldenRow& row);

/// The RunConfig that recomputes `row`, inheriting solver settings from base.
[[nodiscard]] RunConfig config_for(const GoldenRow& row, const RunConfig& base);

}  // namespace hausdim::cli
