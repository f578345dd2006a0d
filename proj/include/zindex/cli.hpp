#pragma once

// Batch frontend: one subcommand per verifier or search, each producing a
// report {command, inputs, result, witnesses, timing_ms, version}.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zindex/zn_core.hpp"

namespace zindex::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_version = "1.0.0";

inline constexpr int exit_computed = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_invariant = 2;

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;
  std::optional<std::string> sequence;  // literal, e.g. "1^8 11 12^10 13^3 mod 22"
  std::optional<Int> n, p, d, k, M, i, j, m, cap, len_cap, budget, threshold;
  std::vector<Int> values;  // subset-hit tuple
  bool force = false;
  bool symmetry_reduction = true;
  bool timing = true;  // false writes timing_ms as null
  unsigned parallelism = 1;
  Format format = Format::json;
  std::optional<std::string> output_path;
};

struct RunResult {
  int exit_code = exit_computed;
  Json report;        // set when exit_code == exit_computed
  std::string error;  // set otherwise
};

/// Subcommand names in help order.
const std::vector<std::string>& commands();

/// Dispatches one command. Usage and precondition errors give exit_usage;
/// internal failures, including a witness that does not replay, give
/// exit_invariant.
RunResult run(const RunConfig& config);

/// JSON is available for every command; CSV for scan-style commands
/// (lemma53, foursum, audit-cases). Throws Error otherwise.
std::string render(const Json& report, Format format);

/// Parses argv, runs, writes the report to stdout or --output, errors to err.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zindex::cli
