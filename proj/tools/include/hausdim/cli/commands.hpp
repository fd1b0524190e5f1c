#pragma once

#include <iosfwd>
#include <vector>

#include "hausdim/cli/config.hpp"
#include "hausdim/cli/record.hpp"

namespace hausdim::cli {

/// Each command returns a record with status "certified" or "failed"; only
/// configuration and input errors throw.
[[nodiscard]] ResultRecord cmd_cantor(const RunConfig& config);
[[nodiscard]] ResultRecord cmd_perturbed(const RunConfig& config);
[[nodiscard]] ResultRecord cmd_complex(const RunConfig& config);

struct ReproduceReport {
  std::vector<ResultRecord> records;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

/// Recomputes the selected reference rows. Rows whose estimated cost exceeds
/// the budget are skipped, not failed.
[[nodiscard]] ReproduceReport cmd_reproduce(const RunConfig& config);

/// Full command-line entry point. Returns 0 iff every requested certification
/// (and, for reproduce, every comparison) succeeded; 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hausdim::cli
