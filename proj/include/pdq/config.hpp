#pragma once

// Run configuration: a line-oriented `key = value` document.
//
//   # comment
//   [run]
//   scenario = fig2
//   grid.samples = 400        # dotted keys work inside or outside sections
//
// Keys are `section.name`; a `[section]` header prefixes the keys below it.
// Values are numbers, bare words, or comma-separated number lists. There is
// no quoting; `#` starts a comment anywhere on a line.

#include <optional>
#include <string>
#include <vector>

#include "pdq/circuit.hpp"
#include "pdq/errors.hpp"

namespace pdq {

enum class Scenario { derive_params, fig2, fig4, oracle_check, sw_check, sweep };
std::string to_string(Scenario s);

enum class SweepParameter { g, omega_a, alpha };
std::string to_string(SweepParameter p);

struct RunConfig {
  Units mode = Units::dimensionless;
  Scenario scenario = Scenario::fig2;
  std::string output_dir;  // empty: CLI / environment decides
  int threads = 1;

  // dimensionless parameter pair (omega = 1)
  double omega_a = 1.8;
  double g = 0.05;
  double theta = 1.5707963267948966;

  // SI device
  CircuitParams circuit;
  CapacitanceConvention convention = CapacitanceConvention::junction_c;

  std::vector<double> alphas;
  double alpha_phase = 0.0;
  int dim = 64;
  double fock_alpha_max = 5.0;
  bool exact_envelope = false;

  std::optional<double> t_max;  // model time units (seconds in SI mode)
  double periods = 2.0;         // used when t_max is unset: periods * pi / Omega
  int samples = 400;

  SweepParameter sweep_parameter = SweepParameter::alpha;
  std::vector<double> sweep_values;

  bool operator==(const RunConfig& o) const;
};

struct ConfigIssue {
  int line = 0;  // 0 when not tied to a line (missing keys)
  std::string key;
  std::string message;
};

/// Every problem found in a document, not only the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

/// Parses and validates; throws ConfigError listing all issues.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical text form; parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& c);

/// Canonical text with run.output and run.threads cleared (inputs that must
/// not affect emitted data).
std::string physics_fingerprint_text(const RunConfig& c);

}  // namespace pdq
