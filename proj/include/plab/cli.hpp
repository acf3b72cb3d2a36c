#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "plab/parallel.hpp"

namespace plab::cli {

using Json = nlohmann::ordered_json;

/// Exit codes shared by `run` and every subcommand.
enum ExitCode : int { kOk = 0, kValidation = 2, kBudget = 3, kCheckFailed = 4 };

/// Inputs to one measurement beyond its own parameters.
struct MeasureContext {
  std::optional<std::uint64_t> seed;  ///< already derived for this measurement
  ExecPolicy policy;
};

/// Runs one measurement {"op": ..., params}. Throws plab::Error.
Json run_measurement(const Json& m, const MeasureContext& ctx);

/// True when `op` consumes randomness for these parameters.
bool needs_seed(const Json& m);

struct RunOptions {
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;  ///< overrides the manifest seed
  std::string out_dir = ".";
  bool write_files = true;
};

struct RunResult {
  int exit_code = kOk;
  Json report;
  std::string csv;
  std::string messages;  ///< one line per failed or erroring measurement
};

/// Executes every measurement (in a pool of `workers` threads), assembles the
/// report in manifest order and writes outputs.report / outputs.csv.
RunResult run_manifest(const Json& manifest, const RunOptions& options);

/// The `plab` command line. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plab::cli
