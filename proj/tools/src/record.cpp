#include "hausdim/cli/record.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <ostream>

#include "hausdim/error.hpp"

namespace hausdim::cli {

using nlohmann::json;

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string format_name(OutputFormat f) { return f == OutputFormat::kCsv ? "csv" : "json"; }

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BracketSummary summarize(const DimensionBracket& b) {
  BracketSummary s;
  s.s_lower = b.s_lower;
  s.s_upper = b.s_upper;
  s.cert_lower = b.cert_lower.value;
  s.cert_upper = b.cert_upper.value;
  s.root_a = b.root_a;
  s.root_b = b.root_b;
  s.h = b.h;
  s.radius = b.radius;
  s.tail_constant = b.tail_constant;
  s.evaluations = b.evaluations;
  return s;
}

void to_json(json& j, const RunConfig& c) {
  j = json{{"command", command_name(c.command)},
           {"digits", c.digits},
           {"lambda", c.lambda},
           {"set", c.set},
           {"R", c.radius},
           {"tol_s", c.tol_s},
           {"tol_eig", c.tol_eig},
           {"margin_rings", c.margin_rings},
           {"safety_factor", c.safety_factor},
           {"out", c.out},
           {"format", format_name(c.format)},
           {"jobs", c.jobs},
           {"ledger", c.ledger},
           {"dump_matrix", c.dump_matrix},
           {"table", c.table},
           {"filter", c.filter},
           {"budget", c.budget}};
  put_optional(j, "h", c.h);
  put_optional(j, "depth", c.depth);
}

void from_json(const json& j, RunConfig& c) {
  c = RunConfig{};
  c.command = parse_command(j.at("command").get<std::string>());
  c.digits = j.at("digits").get<std::vector<int>>();
  c.lambda = j.at("lambda").get<double>();
  c.set = j.at("set").get<std::string>();
  c.h = get_optional<double>(j, "h");
  c.radius = j.at("R").get<double>();
  c.tol_s = j.at("tol_s").get<double>();
  c.tol_eig = j.at("tol_eig").get<double>();
  c.margin_rings = j.at("margin_rings").get<int>();
  c.safety_factor = j.at("safety_factor").get<double>();
  c.depth = get_optional<int>(j, "depth");
  c.out = j.at("out").get<std::string>();
  c.format = j.at("format").get<std::string>() == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  c.jobs = j.at("jobs").get<int>();
  c.ledger = j.at("ledger").get<std::string>();
  c.dump_matrix = j.at("dump_matrix").get<std::string>();
  c.table = j.at("table").get<std::string>();
  c.filter = j.at("filter").get<std::string>();
  c.budget = j.at("budget").get<double>();
}

void to_json(json& j, const ResultRecord& r) {
  j = json{{"config", r.config},       {"problem", r.problem},   {"status", r.status},
           {"message", r.message},     {"seconds", r.seconds},   {"version", r.version},
           {"timestamp", r.timestamp}};
  if (r.bracket) {
    const BracketSummary& b = *r.bracket;
    json jb{{"s_lower", b.s_lower},       {"s_upper", b.s_upper},
            {"width", b.s_upper - b.s_lower},
            {"cert_lower", b.cert_lower}, {"cert_upper", b.cert_upper},
            {"root_a", b.root_a},         {"root_b", b.root_b},
            {"h", b.h},                   {"evaluations", b.evaluations}};
    put_optional(jb, "R", b.radius);
    put_optional(jb, "tail_constant", b.tail_constant);
    j["bracket"] = std::move(jb);
  }
  put_optional(j, "best_estimate", r.best_estimate);
  if (r.check) {
    const GoldenCheck& g = *r.check;
    j["check"] = json{{"table", g.table},
                      {"row", g.row},
                      {"expected_lower", g.expected_lower},
                      {"expected_upper", g.expected_upper},
                      {"tolerance", g.tolerance},
                      {"verdict", g.verdict}};
  }
}

void from_json(const json& j, ResultRecord& r) {
  r = ResultRecord{};
  r.config = j.at("config").get<RunConfig>();
  r.problem = j.at("problem").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.message = j.at("message").get<std::string>();
  r.seconds = j.at("seconds").get<double>();
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  if (j.contains("bracket")) {
    const json& jb = j.at("bracket");
    BracketSummary b;
    b.s_lower = jb.at("s_lower").get<double>();
    b.s_upper = jb.at("s_upper").get<double>();
    b.cert_lower = jb.at("cert_lower").get<double>();
    b.cert_upper = jb.at("cert_upper").get<double>();
    b.root_a = jb.at("root_a").get<double>();
    b.root_b = jb.at("root_b").get<double>();
    b.h = jb.at("h").get<double>();
    b.evaluations = jb.at("evaluations").get<int>();
    b.radius = get_optional<double>(jb, "R");
    b.tail_constant = get_optional<double>(jb, "tail_constant");
    r.bracket = b;
  }
  r.best_estimate = get_optional<double>(j, "best_estimate");
  if (j.contains("check")) {
    const json& jc = j.at("check");
    r.check = GoldenCheck{jc.at("table").get<std::string>(),   jc.at("row").get<std::string>(),
                          jc.at("expected_lower").get<double>(), jc.at("expected_upper").get<double>(),
                          jc.at("tolerance").get<double>(),      jc.at("verdict").get<std::string>()};
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", now);
}

std::string csv_header() {
  return "command,problem,status,h,R,s_lower,s_upper,width,cert_lower,cert_upper,root_a,root_b,"
         "tail_constant,evaluations,seconds,table,row,expected_lower,expected_upper,tolerance,verdict";
}

std::string csv_row(const ResultRecord& r) {
  std::string line = fmt::format("{},{},{}", command_name(r.config.command), quoted(r.problem), r.status);
  if (r.bracket) {
    const BracketSummary& b = *r.bracket;
    line += fmt::format(",{},{},{},{},{},{},{},{},{},{},{}", num(b.h), num(b.radius), num(b.s_lower),
                        num(b.s_upper), num(b.s_upper - b.s_lower), num(b.cert_lower),
                        num(b.cert_upper), num(b.root_a), num(b.root_b), num(b.tail_constant),
                        b.evaluations);
  } else {
    line += fmt::format(",{},,,,,,,,,,", num(r.config.effective_h()));
  }
  line += "," + num(r.seconds);
  if (r.check) {
    line += fmt::format(",{},{},{},{},{},{}", r.check->table, quoted(r.check->row),
                        num(r.check->expected_lower), num(r.check->expected_upper),
                        num(r.check->tolerance), r.check->verdict);
  } else {
    line += ",,,,,,";
  }
  return line;
}

void write_records(const std::vector<ResultRecord>& records, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    out << csv_header() << '\n';
    for (const ResultRecord& r : records) out << csv_row(r) << '\n';
    return;
  }
  if (records.size() == 1) {
    out << json(records.front()).dump(2) << '\n';
  } else {
    out << json(records).dump(2) << '\n';
  }
}

void append_ledger(const std::filesystem::path& path, const std::vector<ResultRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ConfigError("cannot open ledger " + path.string());
  for (const ResultRecord& r : records) out << json(r).dump() << '\n';
}

}  // namespace hausdim::cli
