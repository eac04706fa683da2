#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "modmaj/bounds.hpp"
#include "modmaj/characters.hpp"
#include "modmaj/modmaj.hpp"
#include "modmaj/qpoly.hpp"
#include "modmaj/tableaux.hpp"
#include "modmaj/verify.hpp"

namespace modmaj::cli {

using nlohmann::json;

namespace {

/// Thrown for bad input discovered after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kCensusSizeLimit = 33;
constexpr std::uint64_t kCensusExpected = 688;
constexpr int kLargeShapeSize = 81;

const char* name_of(Command c) {
  switch (c) {
    case Command::table: return "table";
    case Command::character: return "char";
    case Command::verify: return "verify";
    case Command::classify: return "classify";
    case Command::bounds: return "bounds";
  }
  return "?";
}

const char* name_of(Method m) {
  switch (m) {
    case Method::enumerate: return "enumerate";
    case Method::qhook: return "qhook";
    case Method::formula: return "formula";
    case Method::all: return "all";
  }
  return "?";
}

json big_array(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join(const std::vector<BigInt>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].get_str();
  }
  return out;
}

json to_json(const ShapeRecord& r) {
  return json{{"partition", r.shape.to_string()},
              {"n", r.shape.size()},
              {"f", r.f.get_str()},
              {"a", big_array(r.a.counts)},
              {"zero_residues", r.zero_residues},
              {"predicted_residues", r.predicted_residues},
              {"flags", r.flags}};
}

ShapeRecord record_from_json(const json& j) {
  ShapeRecord r;
  r.shape = Partition::parse(j.at("partition").get<std::string>());
  r.f = BigInt(j.at("f").get<std::string>());
  r.a.n = j.at("n").get<int>();
  for (const auto& v : j.at("a")) r.a.counts.emplace_back(v.get<std::string>());
  r.zero_residues = j.at("zero_residues").get<std::vector<int>>();
  r.predicted_residues = j.at("predicted_residues").get<std::vector<int>>();
  r.flags = j.at("flags").get<std::map<std::string, bool>>();
  return r;
}

json to_json(const SuiteResult& r) {
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return json{{"suite", r.suite},       {"n", r.n},
              {"shapes", r.shapes},     {"checks", r.checks},
              {"violations", r.violations}, {"counters", r.counters},
              {"failures", r.failures}, {"records", records}};
}

SuiteResult suite_from_json(const json& j) {
  SuiteResult r;
  r.suite = j.at("suite").get<std::string>();
  r.n = j.at("n").get<int>();
  r.shapes = j.at("shapes").get<std::uint64_t>();
  r.checks = j.at("checks").get<std::uint64_t>();
  r.violations = j.at("violations").get<std::uint64_t>();
  r.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  for (const auto& rec : j.at("records")) r.records.push_back(record_from_json(rec));
  return r;
}

json config_json(const RunConfig& c) {
  json j{{"command", name_of(c.command)}};
  if (c.shape) j["shape"] = c.shape->to_string();
  if (c.ell) j["ell"] = *c.ell;
  if (c.cycle_type) j["cycle_type"] = c.cycle_type->to_string();
  if (c.n_max) j["n_max"] = *c.n_max;
  if (c.command == Command::table) {
    j["method"] = name_of(c.method);
    j["budget"] = c.enumeration_budget;
  }
  if (c.command == Command::verify || c.command == Command::bounds) {
    j["suites"] = c.suites;
    j["budget"] = c.enumeration_budget;
  }
  if (c.command == Command::bounds) {
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["exhaustive_large"] = c.exhaustive_large;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

/// Where the report goes: stdout, or a file with a one-line note on stdout.
class ReportSink {
 public:
  ReportSink(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void emit(const std::string& body, const std::string& summary_line) {
    if (config_.out_path.empty()) {
      out_ << body;
      return;
    }
    std::ofstream file(config_.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + config_.out_path);
    file << body;
    out_ << summary_line << " (report written to " << config_.out_path << ")\n";
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

// ---------------------------------------------------------------- table

int cmd_table(const RunConfig& config, std::ostream& out) {
  const Partition& shape = *config.shape;
  const BigInt f = dimension(shape);
  std::vector<std::pair<std::string, ModularClassVector>> vectors;
  std::vector<std::string> skipped;
  auto want = [&](Method m) { return config.method == m || config.method == Method::all; };
  if (want(Method::enumerate)) {
    try {
      vectors.emplace_back("enumerate", amod_by_enumeration(shape, config.enumeration_budget));
    } catch (const BudgetExceeded& e) {
      if (config.method == Method::enumerate) throw UsageError(e.what());
      skipped.push_back("enumerate");
    }
  }
  if (want(Method::qhook)) vectors.emplace_back("qhook", amod_by_qhook(shape));
  if (want(Method::formula)) vectors.emplace_back("formula", amod_by_character_formula(shape));

  bool agree = true;
  for (const auto& [name, vec] : vectors) agree = agree && vec == vectors.front().second;
  const ModularClassVector& a = vectors.front().second;
  const ShapeRecord record = make_record(shape, f, a);

  std::ostringstream body;
  if (config.format == Format::json) {
    json methods = json::object();
    for (const auto& [name, vec] : vectors) methods[name] = big_array(vec.counts);
    json rec = to_json(record);
    rec["methods"] = methods;
    json report{{"config", config_json(config)},
                {"results", json::array({rec})},
                {"summary",
                 {{"agreement", agree},
                  {"skipped", skipped},
                  {"status", agree ? "pass" : "fail"}}}};
    body << report.dump(2) << "\n";
  } else if (config.format == Format::csv) {
    body << "shape,n,r";
    for (const auto& [name, vec] : vectors) body << "," << name;
    body << "\n";
    for (int r = 0; r < shape.size(); ++r) {
      body << csv_field(shape.to_string()) << "," << shape.size() << "," << r;
      for (const auto& [name, vec] : vectors) body << "," << vec[r].get_str();
      body << "\n";
    }
  } else {
    body << "shape " << shape.to_string() << "  n=" << shape.size() << "  f=" << f.get_str()
         << "\n";
    for (const auto& [name, vec] : vectors) {
      body << name << ": (" << join(vec.counts, ",") << ")\n";
    }
    for (const auto& name : skipped) body << name << ": skipped (over enumeration budget)\n";
    body << "zero residues: {" << join(record.zero_residues, ",") << "}\n";
    if (vectors.size() > 1) body << "agreement: " << (agree ? "OK" : "MISMATCH") << "\n";
  }
  ReportSink(config, out).emit(body.str(), agree ? "table: OK" : "table: MISMATCH");
  return agree ? kOk : kMismatch;
}

// ---------------------------------------------------------------- char

int cmd_char(const RunConfig& config, std::ostream& out) {
  const Partition& shape = *config.shape;
  const int n = shape.size();
  json result{{"shape", shape.to_string()}};
  std::ostringstream text;
  if (config.ell) {
    const int ell = *config.ell;
    if (ell < 1 || n % ell != 0) {
      throw UsageError(std::to_string(ell) + " does not divide " + std::to_string(n));
    }
    const Partition core = ell_core(shape, ell);
    const BigInt magnitude = rect_character_magnitude(shape, ell);
    const int sign = core.empty() ? rect_character_sign(shape, ell) : 0;
    const BigInt value = sign * magnitude;
    result["cycle_type"] = rectangular_cycle_type(n, ell).to_string();
    result["ell"] = ell;
    result["value"] = value.get_str();
    result["sign"] = sign;
    result["magnitude"] = magnitude.get_str();
    result["core"] = core.to_string();
    result["core_empty"] = core.empty();
    text << "chi^(" << shape.to_string() << ")(" << ell << "^" << n / ell
         << ") = " << (value > 0 ? "+" : "") << value.get_str() << "\n"
         << "sign: " << (sign > 0 ? "+1" : sign < 0 ? "-1" : "0") << "\n"
         << "magnitude: " << magnitude.get_str() << "\n"
         << ell << "-core: " << (core.empty() ? "empty" : "(" + core.to_string() + ")") << "\n";
  } else {
    const Partition& mu = *config.cycle_type;
    if (mu.size() != n) throw UsageError("cycle type size differs from shape size");
    const BigInt value = mn_character(shape, mu);
    result["cycle_type"] = mu.to_string();
    result["value"] = value.get_str();
    text << "chi^(" << shape.to_string() << ")(" << mu.to_string() << ") = " << value.get_str()
         << "\n";
  }
  std::ostringstream body;
  if (config.format == Format::json) {
    json report{{"config", config_json(config)},
                {"results", json::array({result})},
                {"summary", {{"status", "pass"}}}};
    body << report.dump(2) << "\n";
  } else if (config.format == Format::csv) {
    body << "shape,cycle_type,value\n"
         << csv_field(shape.to_string()) << "," << csv_field(result["cycle_type"]) << ","
         << result["value"].get<std::string>() << "\n";
  } else {
    body << text.str();
  }
  ReportSink(config, out).emit(body.str(), "char: " + result["value"].get<std::string>());
  return kOk;
}

// ---------------------------------------------------------------- sweeps

using CheckpointMap = std::map<std::pair<std::string, int>, SuiteResult>;

CheckpointMap load_checkpoint(const std::string& path) {
  CheckpointMap done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      SuiteResult r = suite_from_json(json::parse(line));
      auto key = std::make_pair(r.suite, r.n);
      done.insert_or_assign(std::move(key), std::move(r));
    } catch (const std::exception&) {
      // A partially written final line from an interrupted run.
    }
  }
  return done;
}

SuiteResult large_shape_result(const RunConfig& config) {
  const LargeShapeSample sample = config.exhaustive_large
                                      ? large_shape_exhaustive(kLargeShapeSize)
                                      : large_shape_sample(kLargeShapeSize, config.samples,
                                                           config.seed);
  SuiteResult r;
  r.suite = "dist81";
  r.n = kLargeShapeSize;
  r.shapes = sample.sampled;
  r.checks = sample.sampled;
  r.violations = sample.violations;
  for (const auto& shape : sample.violating) {
    r.failures.push_back("λ=(" + shape.to_string() + ") has f < n^5");
  }
  return r;
}

std::vector<SuiteResult> run_sweep(const RunConfig& config, std::ostream& err) {
  CheckpointMap done;
  std::ofstream checkpoint;
  if (!config.resume_path.empty()) {
    done = load_checkpoint(config.resume_path);
    bool torn = false;
    if (std::ifstream tail(config.resume_path, std::ios::binary | std::ios::ate); tail && tail.tellg() > 0) {
      tail.seekg(-1, std::ios::end);
      torn = tail.get() != '\n';
    }
    checkpoint.open(config.resume_path, std::ios::app);
    if (torn) checkpoint << "\n";
    if (!checkpoint) throw UsageError("cannot open checkpoint " + config.resume_path);
  }
  SweepOptions options;
  options.jobs = config.jobs;
  options.enumeration_budget = config.enumeration_budget;

  std::vector<SuiteResult> results;
  auto record = [&](SuiteResult r) {
    if (checkpoint.is_open()) {
      checkpoint << to_json(r).dump() << "\n";
      checkpoint.flush();
    }
    results.push_back(std::move(r));
  };
  for (const auto& suite : config.suites) {
    if (suite == "dist81") {
      if (auto it = done.find({suite, kLargeShapeSize}); it != done.end()) {
        results.push_back(it->second);
      } else {
        record(large_shape_result(config));
      }
      continue;
    }
    for (int n = 1; n <= *config.n_max; ++n) {
      if (auto it = done.find({suite, n}); it != done.end()) {
        results.push_back(it->second);
        continue;
      }
      record(run_suite(suite, n, options));
    }
    (void)err;
  }
  return results;
}

struct SweepSummary {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  json body;
};

SweepSummary summarize(const RunConfig& config, const std::vector<SuiteResult>& results) {
  SweepSummary s;
  json suites = json::object();
  std::map<std::string, std::uint64_t> census_through_limit;
  std::map<std::string, std::uint64_t> census_total;
  for (const auto& r : results) {
    s.checks += r.checks;
    s.violations += r.violations;
    json& entry = suites[r.suite];
    if (entry.is_null()) {
      entry = json{{"checks", 0}, {"violations", 0}, {"shapes", 0}, {"counters", json::object()}};
    }
    entry["checks"] = entry["checks"].get<std::uint64_t>() + r.checks;
    entry["violations"] = entry["violations"].get<std::uint64_t>() + r.violations;
    entry["shapes"] = entry["shapes"].get<std::uint64_t>() + r.shapes;
    for (const auto& [key, value] : r.counters) {
      const std::uint64_t prev = entry["counters"].value(key, std::uint64_t{0});
      entry["counters"][key] = prev + value;
    }
    if (auto it = r.counters.find("census"); it != r.counters.end()) {
      census_total[r.suite] += it->second;
      if (r.n <= kCensusSizeLimit) census_through_limit[r.suite] += it->second;
    }
  }
  s.body = json{{"suites", suites}};
  if (!census_total.empty()) {
    const std::string source =
        census_total.count("fdim-census") ? "fdim-census" : census_total.begin()->first;
    s.body["fdim_census"] = census_total[source];
    if (*config.n_max >= kCensusSizeLimit) {
      const bool ok = census_through_limit[source] == kCensusExpected;
      s.body["fdim_census_through_33"] = census_through_limit[source];
      s.body["fdim_census_expected"] = kCensusExpected;
      ++s.checks;
      if (!ok) ++s.violations;
    }
  }
  s.body["checks"] = s.checks;
  s.body["violations"] = s.violations;
  s.body["status"] = s.violations == 0 ? "pass" : "fail";
  return s;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto results = run_sweep(config, err);
  const SweepSummary summary = summarize(config, results);
  std::ostringstream body;
  if (config.format == Format::json) {
    json rs = json::array();
    for (const auto& r : results) rs.push_back(to_json(r));
    json report{{"config", config_json(config)}, {"results", rs}, {"summary", summary.body}};
    body << report.dump(2) << "\n";
  } else if (config.format == Format::csv) {
    body << "suite,n,shape,f,a,zero_residues,predicted_residues,classification_ok\n";
    for (const auto& r : results) {
      for (const auto& rec : r.records) {
        body << r.suite << "," << r.n << "," << csv_field(rec.shape.to_string()) << ","
             << rec.f.get_str() << "," << csv_field(join(rec.a.counts, " ")) << ","
             << csv_field(join(rec.zero_residues, " ")) << ","
             << csv_field(join(rec.predicted_residues, " ")) << ","
             << (rec.zero_residues == rec.predicted_residues ? "true" : "false") << "\n";
      }
    }
  } else {
    for (const auto& [name, entry] : summary.body["suites"].items()) {
      body << name << ": shapes=" << entry["shapes"] << " checks=" << entry["checks"]
           << " violations=" << entry["violations"];
      for (const auto& [key, value] : entry["counters"].items()) body << " " << key << "=" << value;
      body << "\n";
    }
    for (const auto& r : results) {
      for (const auto& msg : r.failures) body << "  [" << r.suite << " n=" << r.n << "] " << msg << "\n";
    }
    if (summary.body.contains("fdim_census")) {
      body << "shapes with f < n^3: " << summary.body["fdim_census"];
      if (summary.body.contains("fdim_census_through_33")) {
        body << " (n <= 33: " << summary.body["fdim_census_through_33"] << ", expected "
             << kCensusExpected << ")";
      }
      body << "\n";
    }
    body << (summary.violations == 0 ? "PASS" : "FAIL") << ": " << summary.checks
         << " checks, " << summary.violations << " violations\n";
  }
  const std::string line = std::string(name_of(config.command)) + ": " +
                           (summary.violations == 0 ? "PASS" : "FAIL") + ", " +
                           std::to_string(summary.violations) + " violations";
  ReportSink(config, out).emit(body.str(), line);
  return summary.violations == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const RunConfig& config, std::ostream& out) {
  std::ostringstream body;
  json rs = json::array();
  std::uint64_t total = 0;
  for (int n = 1; n <= *config.n_max; ++n) {
    const auto records = exception_records(n);
    json ex = json::array();
    for (const auto& rec : records) {
      ex.push_back(json{{"partition", rec.shape.to_string()}, {"residues", rec.residues}});
    }
    total += records.size();
    rs.push_back(json{{"n", n}, {"exceptions", ex}});
    if (config.format == Format::text) {
      body << "n=" << n << ":";
      if (records.empty()) body << " none";
      for (const auto& rec : records) {
        body << " (" << rec.shape.to_string() << "):{" << join(rec.residues, ",") << "}";
      }
      body << "\n";
    }
  }
  if (config.format == Format::json) {
    json report{{"config", config_json(config)},
                {"results", rs},
                {"summary", {{"exception_shapes", total}, {"status", "pass"}}}};
    body.str("");
    body << report.dump(2) << "\n";
  } else if (config.format == Format::csv) {
    body.str("");
    body << "n,shape,residues\n";
    for (const auto& entry : rs) {
      for (const auto& ex : entry["exceptions"]) {
        body << entry["n"] << "," << csv_field(ex["partition"].get<std::string>()) << ","
             << csv_field(join(ex["residues"].get<std::vector<int>>(), " ")) << "\n";
      }
    }
  }
  ReportSink(config, out).emit(body.str(), "classify: " + std::to_string(total) + " exception shapes");
  return kOk;
}

// ---------------------------------------------------------------- parsing

Partition parse_shape(const std::string& text, bool allow_empty = false) {
  try {
    Partition p = Partition::parse(text);
    if (p.empty() && !allow_empty) throw UsageError("shape must be nonempty");
    return p;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> expand_suites(const std::string& spec,
                                       const std::vector<std::string>& known) {
  if (spec == "all") return known;
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool ok = false;
    for (const auto& k : known) ok = ok || k == item;
    if (!ok) throw UsageError("unknown suite \"" + item + "\"");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty suite list");
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("MODMAJ_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard Young tableaux by major index mod n: tables, characters, sweeps", "modmaj"};
  app.require_subcommand(1);

  RunConfig config;
  config.jobs = default_jobs();
  std::string shape_text;
  std::string cycle_text;
  std::string method_text = "qhook";
  std::string format_text = "text";
  std::string suite_text = "all";
  int n_max = 0;
  int ell = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", config.jobs, "worker threads (default $MODMAJ_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", config.enumeration_budget, "max tableaux to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", config.out_path, "write the report to FILE");
  };

  auto* table = app.add_subcommand("table", "a_{λ,r} for one shape");
  table->add_option("--shape", shape_text, "partition, e.g. 4,2,1 or 2^3,1")->required();
  table->add_option("--method", method_text, "enumerate, qhook, formula or all")
      ->check(CLI::IsMember({"enumerate", "qhook", "formula", "all"}));
  common(table);

  auto* chr = app.add_subcommand("char", "character value at ℓ^{n/ℓ} or a cycle type");
  chr->add_option("--shape", shape_text, "partition")->required();
  auto* ell_opt = chr->add_option("--ell", ell, "cycle length ℓ dividing n");
  auto* cyc_opt = chr->add_option("--cycle-type", cycle_text, "full cycle type");
  ell_opt->excludes(cyc_opt);
  common(chr);

  auto* verify = app.add_subcommand("verify", "exhaustive verification sweeps");
  verify->add_option("--n-max", n_max, "largest size to sweep")->required()->check(CLI::PositiveNumber);
  verify->add_option("--suite", suite_text, "comma-separated suites or all");
  verify->add_option("--resume", config.resume_path, "checkpoint file to resume from and append to");
  common(verify);

  auto* classify = app.add_subcommand("classify", "predicted zero residues per size");
  classify->add_option("--n-max", n_max, "largest size")->required()->check(CLI::PositiveNumber);
  common(classify);

  auto* bounds = app.add_subcommand("bounds", "inequality sweeps");
  bounds->add_option("--n-max", n_max, "largest size to sweep")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--suite", suite_text, "comma-separated suites or all");
  bounds->add_option("--resume", config.resume_path, "checkpoint file to resume from and append to");
  bounds->add_option("--samples", config.samples, "shapes of size 81 to sample");
  bounds->add_option("--seed", config.seed, "sampling seed");
  bounds->add_flag("--exhaustive-81", config.exhaustive_large,
                   "check every partition of 81 instead of sampling (long)");
  common(bounds);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    config.format = format_text == "json" ? Format::json
                    : format_text == "csv" ? Format::csv
                                           : Format::text;
    config.method = method_text == "enumerate" ? Method::enumerate
                    : method_text == "formula" ? Method::formula
                    : method_text == "all"     ? Method::all
                                               : Method::qhook;
    if (!shape_text.empty() || table->parsed() || chr->parsed()) {
      config.shape = parse_shape(shape_text);
    }
    if (n_max > 0) config.n_max = n_max;

    if (table->parsed()) {
      config.command = Command::table;
      return cmd_table(config, out);
    }
    if (chr->parsed()) {
      config.command = Command::character;
      if (ell_opt->count() > 0) {
        config.ell = ell;
      } else if (cyc_opt->count() > 0) {
        config.cycle_type = parse_shape(cycle_text);
      } else {
        throw UsageError("char needs --ell or --cycle-type");
      }
      return cmd_char(config, out);
    }
    if (verify->parsed()) {
      config.command = Command::verify;
      config.suites = expand_suites(suite_text, verify_suites());
      return cmd_sweep(config, out, err);
    }
    if (classify->parsed()) {
      config.command = Command::classify;
      return cmd_classify(config, out);
    }
    config.command = Command::bounds;
    std::vector<std::string> known = bound_suites();
    known.push_back("dist81");
    config.suites = expand_suites(suite_text, known);
    return cmd_sweep(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace modmaj::cli
