#pragma once

// Scenario execution: turns a RunConfig into data files plus manifest.json.

#include <optional>
#include <string>
#include <vector>

#include "pdq/circuit.hpp"
#include "pdq/config.hpp"

namespace pdq {

inline constexpr const char* kToolVersion = "0.4.0";

enum ExitCode : int {
  exit_ok = 0,
  exit_config_error = 2,
  exit_numeric_error = 3,
  exit_check_failed = 4,
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = true;
  bool gating = true;  // informational checks never change the exit code
  std::string detail;
};

struct EmittedFile {
  std::string name;  // relative to the output directory
  std::string sha256;
  std::size_t bytes = 0;
};

struct RunManifest {
  RunConfig config;
  std::string output_dir;
  std::optional<ModelParams> params;  // in run units
  std::optional<RegimeReport> regime;
  std::vector<CheckResult> checks;
  std::vector<EmittedFile> files;
  std::vector<std::string> errors;
  double wall_seconds = 0.0;
  int exit_code = exit_ok;

  std::string to_json() const;
};

/// Model parameters of a run: derived from the circuit in SI mode (with the
/// configured capacitance convention), or omega = 1 in dimensionless mode.
ModelParams resolve_params(const RunConfig& cfg);

/// Runs the scenario, writes every data file and manifest.json into
/// `output_dir`. Module errors are caught, recorded and mapped to an exit code.
RunManifest run_scenario(const RunConfig& cfg, const std::string& output_dir);

/// Parameter table for both capacitance conventions (SI) plus regime checks.
std::string derive_report(const RunConfig& cfg);

/// Built-in configurations used by `check`.
RunConfig builtin_oracle_check();
RunConfig builtin_sw_check();

/// Maps an exception to its exit code.
int exit_code_for(const std::exception& e);

}  // namespace pdq
