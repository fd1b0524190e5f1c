#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hausdim/cli/commands.hpp"
#include "hausdim/cli/config.hpp"
#include "hausdim/cli/golden.hpp"
#include "hausdim/cli/record.hpp"
#include "hausdim/error.hpp"

using namespace hausdim;
using namespace hausdim::cli;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "hausdim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("hausdim_test_" + std::to_string(::getpid()) + "_" + name);
}

// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> f(1);
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      f.emplace_back();
    } else {
      f.back() += ch;
    }
  }
  return f;
}

}  // namespace

TEST(Config, DefaultsAndEffectiveValues) {
  RunConfig c;
  EXPECT_EQ(c.effective_h(), 1e-4);
  EXPECT_EQ(c.effective_depth(), 0);
  c.command = Command::kComplex;
  EXPECT_EQ(c.effective_h(), 0.02);
  c.depth = 2;
  EXPECT_EQ(c.effective_depth(), 2);
}

TEST(Config, ApplySetting) {
  RunConfig c;
  apply_setting(c, "tol_s", "1e-10");
  apply_setting(c, "tol-eig", "1e-11");
  apply_setting(c, "R", "200");
  apply_setting(c, "digits", "3,1,2");
  apply_setting(c, "format", "csv");
  EXPECT_EQ(c.tol_s, 1e-10);
  EXPECT_EQ(c.tol_eig, 1e-11);
  EXPECT_EQ(c.radius, 200.0);
  EXPECT_EQ(c.digits, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(c.format, OutputFormat::kCsv);
  EXPECT_THROW(apply_setting(c, "colour", "red"), ConfigError);
  EXPECT_THROW(apply_setting(c, "h", "abc"), ConfigError);
  EXPECT_THROW(apply_setting(c, "format", "xml"), ConfigError);
}

TEST(Config, Validate) {
  RunConfig c;
  c.command = Command::kComplex;
  c.h = 0.03;
  EXPECT_THROW(validate(c), ConfigError);
  c.h = 0.025;
  EXPECT_NO_THROW(validate(c));
  c.table = "t2";
  c.command = Command::kReproduce;
  EXPECT_THROW(validate(c), ConfigError);
  RunConfig neg;
  neg.tol_s = -1.0;
  EXPECT_THROW(validate(neg), ConfigError);
}

TEST(Config, FileParsing) {
  const auto path = temp_file("cfg.txt");
  {
    std::ofstream f(path);
    f << "# comment\n\nh = 0.001\ndigits=2,3\n  tol_s=1e-9\n";
  }
  RunConfig c;
  load_config_file(c, path);
  EXPECT_EQ(c.h, 0.001);
  EXPECT_EQ(c.digits, (std::vector<int>{2, 3}));
  EXPECT_EQ(c.tol_s, 1e-9);
  {
    std::ofstream f(path);
    f << "no equals sign\n";
  }
  EXPECT_THROW(load_config_file(c, path), ConfigError);
  fs::remove(path);
  EXPECT_THROW(load_config_file(c, path), ConfigError);
}

TEST(Config, DigitLists) {
  EXPECT_EQ(parse_digit_list("1,2"), (std::vector<int>{1, 2}));
  EXPECT_EQ(parse_digit_list(" 100 , 10000 "), (std::vector<int>{100, 10000}));
  EXPECT_THROW((void)parse_digit_list(""), ConfigError);
  EXPECT_THROW((void)parse_digit_list("1,x"), ConfigError);
}

TEST(Record, JsonRoundTrip) {
  ResultRecord r;
  r.config.command = Command::kComplex;
  r.config.set = "I1";
  r.config.h = 0.02;
  r.config.depth = 3;
  r.problem = "I1 R=100";
  r.status = "certified";
  BracketSummary b;
  b.s_lower = 1.8545932;
  b.s_upper = 1.0 / 3.0;
  b.cert_lower = 1.0000000000001;
  b.h = 0.02;
  b.radius = 100.0;
  b.tail_constant = 0.000798570831648;
  b.evaluations = 17;
  r.bracket = b;
  r.check = GoldenCheck{"t4", "I1 R=100", 1.85459, 1.85609, 1e-3, "pass"};
  r.seconds = 1.25;
  r.version = "x";
  r.timestamp = "2026-01-01T00:00:00Z";
  const nlohmann::json j = r;
  EXPECT_EQ(j.get<ResultRecord>(), r);
  ResultRecord failed;
  failed.status = "failed";
  failed.best_estimate = 0.5;
  const nlohmann::json jf = failed;
  EXPECT_EQ(jf.get<ResultRecord>(), failed);
  EXPECT_FALSE(jf.contains("bracket"));
}

TEST(Record, CsvHasMatchingColumns) {
  ResultRecord r;
  r.problem = "E[1,2]";
  r.status = "certified";
  r.bracket = BracketSummary{};
  r.bracket->s_lower = 0.1;
  const auto row = csv_fields(csv_row(r));
  EXPECT_EQ(csv_fields(csv_header()).size(), row.size());
  EXPECT_EQ(row[1], "E[1,2]");
  EXPECT_NE(csv_row(r).find("0.10000000000000001"), std::string::npos);
}

TEST(Golden, RowSelection) {
  EXPECT_EQ(select_rows("t1", "").size(), 26u);
  EXPECT_EQ(select_rows("t3", "").size(), 5u);
  EXPECT_EQ(select_rows("t4", "").size(), 15u);
  EXPECT_EQ(select_rows("t4", "I3").size(), 3u);
  EXPECT_TRUE(select_rows("t3", "zzz").empty());
  for (const auto& row : golden_rows()) {
    EXPECT_LE(row.lower, row.upper);
    EXPECT_GT(row.tolerance, 0.0);
    EXPECT_GT(estimated_seconds(row), 0.0);
    const RunConfig c = config_for(row, RunConfig{});
    EXPECT_EQ(c.command, row.command);
    EXPECT_NO_THROW(validate(c));
  }
}

TEST(Cli, CantorJson) {
  const auto r = run({"cantor", "--digits", "1,2", "--h", "1e-3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("status"), "certified");
  const double lo = j.at("bracket").at("s_lower");
  const double hi = j.at("bracket").at("s_upper");
  EXPECT_LT(lo, 0.5312805062772);
  EXPECT_GT(hi, 0.5312805062772);
  EXPECT_NE(r.err.find("E[1,2]"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const auto a = run({"perturbed", "--lambda", "0.5", "--h", "2e-3", "--format", "csv"});
  const auto b = run({"perturbed", "--lambda", "0.5", "--h", "2e-3", "--format", "csv", "--jobs", "3"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  // strip time-dependent columns: compare the bracket fields only
  const auto la = a.out.substr(a.out.find('\n') + 1);
  const auto lb = b.out.substr(b.out.find('\n') + 1);
  const auto fa = csv_fields(la.substr(0, la.find('\n')));
  const auto fb = csv_fields(lb.substr(0, lb.find('\n')));
  const auto header = csv_fields(a.out.substr(0, a.out.find('\n')));
  ASSERT_EQ(fa.size(), header.size());
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == "s_lower" || header[k] == "s_upper") EXPECT_EQ(fa[k], fb[k]);
  }
}

TEST(Cli, ConfigPrecedence) {
  const auto cfg = temp_file("prec.txt");
  const auto out1 = temp_file("o1.json");
  const auto out2 = temp_file("o2.json");
  {
    std::ofstream f(cfg);
    f << "digits=2,3\nh=0.004\nout=" << out1.string() << "\n";
  }
  auto r = run({"cantor", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f1(out1);
  const auto j1 = nlohmann::json::parse(f1);
  EXPECT_EQ(j1.at("problem"), "E[2,3]");
  EXPECT_EQ(j1.at("config").at("h"), 0.004);

  r = run({"cantor", "--config", cfg.string(), "--h", "0.002", "--out", out2.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f2(out2);
  const auto j2 = nlohmann::json::parse(f2);
  EXPECT_EQ(j2.at("problem"), "E[2,3]");  // from the file
  EXPECT_EQ(j2.at("config").at("h"), 0.002);  // flag wins
  for (const auto& p : {cfg, out1, out2}) fs::remove(p);
}

TEST(Cli, LedgerAndMatrixDump) {
  const auto ledger = temp_file("ledger.ndjson");
  const auto dump = temp_file("dump.txt");
  for (int k = 0; k < 2; ++k) {
    const auto r = run({"cantor", "--h", "0.01", "--ledger", ledger.string(), "--dump-matrix", dump.string()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  std::ifstream in(ledger);
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_EQ(nlohmann::json::parse(line).at("status"), "certified");
    ++lines;
  }
  EXPECT_EQ(lines, 2);
  std::ifstream d(dump);
  std::string first;
  std::getline(d, first);
  EXPECT_EQ(first.rfind("% A s=", 0), 0u);
  fs::remove(ledger);
  fs::remove(dump);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"cantor", "--digits", "1,1"}).code, 2);
  EXPECT_EQ(run({"cantor", "--nonsense", "3"}).code, 2);
  EXPECT_EQ(run({"complex", "--h", "0.03"}).code, 2);
  EXPECT_EQ(run({"complex", "--set", "I1", "--R", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).code, 0);
  // too coarse to certify: a failed record, not a usage error
  const auto r = run({"perturbed", "--lambda", "1", "--h", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("status"), "failed");
}

TEST(Cli, ReproduceFilterAndBudget) {
  auto r = run({"reproduce", "--table", "t3", "--filter", "lambda=0.25"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("1 passed, 0 failed, 0 skipped"), std::string::npos) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("check").at("verdict"), "pass");
  r = run({"reproduce", "--table", "t4", "--budget", "0.001"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("0 passed, 0 failed, 15 skipped"), std::string::npos) << r.err;
}
