#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modmaj/partition.hpp"

namespace modmaj::cli {

enum class Command { table, character, verify, classify, bounds };
enum class Method { enumerate, qhook, formula, all };
enum class Format { json, csv, text };

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
  Command command = Command::table;
  std::optional<Partition> shape;
  std::optional<int> ell;
  std::optional<Partition> cycle_type;
  std::optional<int> n_max;
  Method method = Method::qhook;
  std::vector<std::string> suites;
  Format format = Format::text;
  int jobs = 1;
  std::uint64_t enumeration_budget = 10'000'000;
  std::string out_path;
  std::string resume_path;
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  bool exhaustive_large = false;
};

/// Parses arguments (without the program name) and runs the command.
/// Everything the command prints goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modmaj::cli
