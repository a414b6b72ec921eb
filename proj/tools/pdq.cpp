// pdq: command-line front end.
//
//   pdq run --config <path> [--out <dir>] [--threads N]
//   pdq check [--out <dir>] [--threads N]
//   pdq derive --config <path>
//
// PDQ_OUT_DIR supplies the output directory when neither --out nor the
// config's run.output is given. Exit codes: 0 ok, 2 config error,
// 3 numeric/regime error, 4 acceptance-check failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "pdq/scenario.hpp"

namespace {

std::string default_out_dir(const std::string& flag, const std::string& from_config) {
  if (!flag.empty()) return flag;
  if (!from_config.empty()) return from_config;
  if (const char* env = std::getenv("PDQ_OUT_DIR"); env && *env) return env;
  return "pdq_out";
}

void summarize(const pdq::RunManifest& m, std::ostream& os) {
  for (const auto& c : m.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << (c.gating ? "" : "(info) ") << c.name << ": " << c.value
       << " (threshold " << c.threshold << ")\n";
  }
  for (const auto& e : m.errors) os << "error: " << e << "\n";
  os << m.files.size() << " file(s) written to " << m.output_dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Progressive decoherence of a charge qubit coupled to an LC oscillator"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  int threads = 0;

  auto* run = app.add_subcommand("run", "run the scenario described by a config file");
  run->add_option("--config", config_path, "config file")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "oracle and Schrieffer-Wolff checks with built-in defaults");
  check->add_option("--out", out_dir, "output directory");
  check->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* derive = app.add_subcommand("derive", "print model parameters for both capacitance conventions");
  derive->add_option("--config", config_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pdq::exit_config_error;
  }

  try {
    if (*run) {
      pdq::RunConfig cfg = pdq::load_config(config_path);
      if (threads > 0) cfg.threads = threads;
      const auto m = pdq::run_scenario(cfg, default_out_dir(out_dir, cfg.output_dir));
      summarize(m, std::cout);
      return m.exit_code;
    }
    if (*check) {
      const std::string base = default_out_dir(out_dir, "");
      int rc = pdq::exit_ok;
      for (auto cfg : {pdq::builtin_oracle_check(), pdq::builtin_sw_check()}) {
        if (threads > 0) cfg.threads = threads;
        const auto dir = (std::filesystem::path(base) / pdq::to_string(cfg.scenario)).string();
        const auto m = pdq::run_scenario(cfg, dir);
        summarize(m, std::cout);
        rc = std::max(rc, m.exit_code);
      }
      return rc;
    }
    if (*derive) {
      std::cout << pdq::derive_report(pdq::load_config(config_path));
      return pdq::exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pdq::exit_code_for(e);
  }
  return pdq::exit_ok;
}
