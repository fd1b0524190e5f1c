#include "hausdim/cli/commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>

#include "hausdim/cli/golden.hpp"
#include "hausdim/collocation.hpp"
#include "hausdim/error.hpp"
#include "hausdim/parallel.hpp"
#include "hausdim/solver.hpp"
#include "hausdim/version.hpp"

namespace hausdim::cli {

namespace {

SolverOptions solver_options(const RunConfig& c) {
  SolverOptions o;
  o.tol_s = c.tol_s;
  o.tol_eig = c.tol_eig;
  return o;
}

AssemblyOptions assembly_options(const RunConfig& c) {
  AssemblyOptions o;
  o.threads = c.jobs;
  o.safety_factor = c.safety_factor;
  return o;
}

ResultRecord start_record(const RunConfig& c, std::string problem) {
  ResultRecord r;
  r.config = c;
  r.problem = std::move(problem);
  r.version = kVersion;
  r.timestamp = utc_timestamp();
  return r;
}

void dump_pair(const std::string& path, const BracketMatrices& m) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open matrix dump file " + path);
  out << "% A s=" << fmt::format("{:.17g}", m.s) << " n=" << m.A.size() << '\n';
  dump_matrix(m.A, out);
  out << "% B s=" << fmt::format("{:.17g}", m.s) << " n=" << m.B.size() << '\n';
  dump_matrix(m.B, out);
}

// Runs solve() and fills the record; CertificationError becomes status "failed".
template <class Solve, class Family>
ResultRecord run_solver(const RunConfig& c, std::string label, Solve&& solve, Family&& family) {
  ResultRecord r = start_record(c, std::move(label));
  const auto started = std::chrono::steady_clock::now();
  try {
    const DimensionBracket b = solve();
    r.bracket = summarize(b);
    r.status = "certified";
    if (!c.dump_matrix.empty()) dump_pair(c.dump_matrix, family()(b.s_upper));
  } catch (const CertificationError& e) {
    r.status = "failed";
    r.message = e.what();
    r.best_estimate = e.best_estimate();
  } catch (const AssemblyError& e) {
    r.status = "failed";
    r.message = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

}  // namespace

ResultRecord cmd_cantor(const RunConfig& c) {
  validate(c);
  const IfsProblem1D problem = continued_fraction_problem(c.digits);
  const MeshParams1D mesh{c.effective_h(), c.effective_depth()};
  return run_solver(
      c, problem.label,
      [&] { return solve_1d(problem, mesh, solver_options(c), assembly_options(c)); },
      [&] {
        return family_1d(problem, build_mesh_1d(refine_domain_1d(problem.maps, mesh.depth), mesh.h),
                         assembly_options(c));
      });
}

ResultRecord cmd_perturbed(const RunConfig& c) {
  validate(c);
  const IfsProblem1D problem = perturbed_cantor_problem(c.lambda);
  const MeshParams1D mesh{c.effective_h(), c.effective_depth()};
  return run_solver(
      c, problem.label,
      [&] { return solve_1d(problem, mesh, solver_options(c), assembly_options(c)); },
      [&] {
        return family_1d(problem, build_mesh_1d(refine_domain_1d(problem.maps, mesh.depth), mesh.h),
                         assembly_options(c));
      });
}

ResultRecord cmd_complex(const RunConfig& c) {
  validate(c);
  DigitSetSpec spec;
  spec.kind = parse_digit_set(c.set);
  spec.truncation_radius = c.radius;
  if (spec.is_infinite() && !(c.radius >= 3.0)) {
    throw ConfigError("R must be at least 3 for the infinite sets I1 and I2");
  }
  const IfsProblem2D problem = complex_problem(spec);
  const MeshParams2D mesh{c.effective_h(), c.margin_rings};
  std::string label = problem.label;
  if (spec.is_infinite()) label += fmt::format(" R={:g}", c.radius);
  return run_solver(
      c, label, [&] { return solve_2d(problem, mesh, solver_options(c), assembly_options(c)); },
      [&] {
        return family_2d(problem,
                         build_mesh_2d(mesh.h, mesh.margin_rings, spec.conjugation_closed()),
                         assembly_options(c));
      });
}

ReproduceReport cmd_reproduce(const RunConfig& c) {
  validate(c);
  const std::vector<GoldenRow> rows = select_rows(c.table, c.filter);
  ReproduceReport report;
  report.records.resize(rows.size());
  // rows run concurrently; each solve then assembles single-threaded
  const int row_jobs = c.jobs;
  parallel_for(rows.size(), row_jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const GoldenRow& row = rows[i];
      RunConfig rc = config_for(row, c);
      rc.jobs = 1;
      rc.dump_matrix.clear();
      GoldenCheck check{row.table, row.label, row.lower, row.upper, row.tolerance, "skipped"};
      ResultRecord rec;
      if (estimated_seconds(row) > c.budget) {
        rec = start_record(rc, row.label);
        rec.status = "skipped";
        rec.message = fmt::format("estimated {:.0f} s exceeds the budget of {:g} s",
                                  estimated_seconds(row), c.budget);
      } else {
        switch (row.command) {
          case Command::kCantor:
            rec = cmd_cantor(rc);
            break;
          case Command::kPerturbed:
            rec = cmd_perturbed(rc);
            break;
          default:
            rec = cmd_complex(rc);
            break;
        }
        const bool ok = rec.bracket &&
                        std::abs(rec.bracket->s_lower - row.lower) <= row.tolerance &&
                        std::abs(rec.bracket->s_upper - row.upper) <= row.tolerance;
        check.verdict = ok ? "pass" : "fail";
      }
      rec.check = check;
      report.records[i] = std::move(rec);
    }
  });
  for (const ResultRecord& r : report.records) {
    if (r.check->verdict == "pass") ++report.passed;
    if (r.check->verdict == "fail") ++report.failed;
    if (r.check->verdict == "skipped") ++report.skipped;
  }
  return report;
}

namespace {

// Flags shared by every subcommand, stored as raw strings so that only the
// ones actually given override the config file.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::string config_path;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, values[name], help);
  }
};

void add_common(CLI::App* app, FlagSet& flags) {
  app->add_option("--config", flags.config_path, "key=value configuration file");
  flags.add(app, "h", "mesh size");
  flags.add(app, "tol-s", "target bracket tolerance in s");
  flags.add(app, "tol-eig", "relative Collatz-Wielandt gap for power iteration");
  flags.add(app, "out", "output file (default: stdout)");
  flags.add(app, "format", "json or csv");
  flags.add(app, "jobs", "worker threads (default: HAUSDIM_JOBS or 1)");
  flags.add(app, "safety-factor", "multiplicative safety factor on corrections");
  flags.add(app, "ledger", "append records to this NDJSON file");
}

void print_summary(const ResultRecord& r, std::ostream& err) {
  const std::string verdict = r.check ? " [" + r.check->verdict + "]" : std::string();
  if (r.bracket) {
    err << fmt::format("{:<10} {:<16} h={:<8g} [{:.15f}, {:.15f}] width={:.3e} {:.2f}s{}\n",
                       command_name(r.config.command), r.problem, r.bracket->h, r.bracket->s_lower,
                       r.bracket->s_upper, r.bracket->s_upper - r.bracket->s_lower, r.seconds,
                       verdict);
  } else {
    err << fmt::format("{:<10} {:<16} h={:<8g} {}: {}{}\n", command_name(r.config.command),
                       r.problem, r.config.effective_h(), r.status, r.message, verdict);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified Hausdorff dimension brackets for IFS limit sets", "hausdim"};
  app.set_version_flag("--version", std::string(kVersion));
  // --h is the mesh size, so help is long-form only
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  FlagSet flags;

  CLI::App* cantor = app.add_subcommand("cantor", "continued-fraction Cantor set E[digits]");
  add_common(cantor, flags);
  flags.add(cantor, "digits", "comma-separated distinct positive integers");
  flags.add(cantor, "depth", "domain refinement depth (default 0)");
  flags.add(cantor, "dump-matrix", "write A and B at s_upper in coordinate format");

  CLI::App* perturbed = app.add_subcommand("perturbed", "perturbed middle-thirds Cantor set");
  add_common(perturbed, flags);
  flags.add(perturbed, "lambda", "perturbation parameter in [0,1]");
  flags.add(perturbed, "depth", "domain refinement depth (default 0)");
  flags.add(perturbed, "dump-matrix", "write A and B at s_upper in coordinate format");

  CLI::App* complex = app.add_subcommand("complex", "complex continued fractions I1, I2, I3");
  add_common(complex, flags);
  flags.add(complex, "set", "I1, I2 or I3");
  flags.add(complex, "R", "digit truncation radius for I1/I2");
  flags.add(complex, "margin-rings", "extra rings of mesh cells");
  flags.add(complex, "dump-matrix", "write A and B at s_upper in coordinate format");

  CLI::App* reproduce = app.add_subcommand("reproduce", "recompute reference tables");
  add_common(reproduce, flags);
  flags.add(reproduce, "table", "t1, t3 or t4");
  flags.add(reproduce, "filter", "only rows whose label contains this text");
  flags.add(reproduce, "budget", "skip rows estimated above this many seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig config = default_config();
    if (!flags.config_path.empty()) load_config_file(config, flags.config_path);
    for (CLI::App* sub : {cantor, perturbed, complex, reproduce}) {
      if (sub->parsed()) config.command = parse_command(sub->get_name());
    }
    for (const auto& [name, value] : flags.values) {
      if (!value.empty()) apply_setting(config, name, value);
    }
    validate(config);

    std::vector<ResultRecord> records;
    bool ok = true;
    switch (config.command) {
      case Command::kCantor:
        records.push_back(cmd_cantor(config));
        break;
      case Command::kPerturbed:
        records.push_back(cmd_perturbed(config));
        break;
      case Command::kComplex:
        records.push_back(cmd_complex(config));
        break;
      case Command::kReproduce: {
        ReproduceReport report = cmd_reproduce(config);
        records = std::move(report.records);
        ok = report.failed == 0;
        err << fmt::format("{} passed, {} failed, {} skipped\n", report.passed, report.failed,
                           report.skipped);
        break;
      }
    }
    for (const ResultRecord& r : records) {
      print_summary(r, err);
      if (r.status == "failed") ok = false;
    }

    if (config.out.empty()) {
      write_records(records, config.format, out);
    } else {
      std::ofstream file(config.out);
      if (!file) throw ConfigError("cannot open output file " + config.out);
      write_records(records, config.format, file);
    }
    if (!config.ledger.empty()) append_ledger(config.ledger, records);
    return ok ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hausdim::cli
