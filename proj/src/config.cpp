#include "pdq/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pdq {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::derive_params: return "derive-params";
    case Scenario::fig2: return "fig2";
    case Scenario::fig4: return "fig4";
    case Scenario::oracle_check: return "oracle-check";
    case Scenario::sw_check: return "sw-check";
    case Scenario::sweep: return "sweep";
  }
  return "unknown";
}

std::string to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::g: return "g";
    case SweepParameter::omega_a: return "omega_a";
    case SweepParameter::alpha: return "alpha";
  }
  return "unknown";
}

bool RunConfig::operator==(const RunConfig& o) const {
  auto circuit_eq = [](const CircuitParams& a, const CircuitParams& b) {
    return a.C_J == b.C_J && a.C_g == b.C_g && a.L == b.L && a.E_J0 == b.E_J0 &&
           a.phi_x == b.phi_x && a.n_g == b.n_g;
  };
  return mode == o.mode && scenario == o.scenario && output_dir == o.output_dir &&
         threads == o.threads && omega_a == o.omega_a && g == o.g && theta == o.theta &&
         circuit_eq(circuit, o.circuit) && convention == o.convention && alphas == o.alphas &&
         alpha_phase == o.alpha_phase && dim == o.dim && fock_alpha_max == o.fock_alpha_max &&
         exact_envelope == o.exact_envelope && t_max == o.t_max && periods == o.periods &&
         samples == o.samples && sweep_parameter == o.sweep_parameter &&
         sweep_values == o.sweep_values;
}

namespace {

std::string describe(const std::vector<ConfigIssue>& issues) {
  std::ostringstream os;
  os << "invalid configuration (" << issues.size() << " issue" << (issues.size() == 1 ? "" : "s")
     << ")";
  for (const auto& i : issues) {
    os << "\n  ";
    if (i.line > 0) os << "line " << i.line << ": ";
    if (!i.key.empty()) os << i.key << ": ";
    os << i.message;
  }
  return os.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> to_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<int> to_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE || v < INT32_MIN || v > INT32_MAX) {
    return std::nullopt;
  }
  return int(v);
}

std::optional<std::vector<double>> to_list(const std::string& s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = to_double(trim(item));
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt(v[i]);
  }
  return s;
}

// Parsed-but-not-yet-resolved values that depend on other keys.
struct Pending {
  bool ej_kelvin = false;
  std::optional<double> v_g;
  bool n_g_set = false;
};

using Setter = std::function<std::optional<std::string>(const std::string&, RunConfig&, Pending&)>;

template <typename T>
Setter number(T RunConfig::*field) {
  return [field](const std::string& v, RunConfig& c, Pending&) -> std::optional<std::string> {
    if constexpr (std::is_same_v<T, int>) {
      const auto x = to_int(v);
      if (!x) return "expected an integer, got '" + v + "'";
      c.*field = *x;
    } else {
      const auto x = to_double(v);
      if (!x) return "expected a number, got '" + v + "'";
      c.*field = *x;
    }
    return std::nullopt;
  };
}

Setter circuit_number(double CircuitParams::*field) {
  return [field](const std::string& v, RunConfig& c, Pending&) -> std::optional<std::string> {
    const auto x = to_double(v);
    if (!x) return "expected a number, got '" + v + "'";
    c.circuit.*field = *x;
    return std::nullopt;
  };
}

Setter number_list(std::vector<double> RunConfig::*field) {
  return [field](const std::string& v, RunConfig& c, Pending&) -> std::optional<std::string> {
    const auto x = to_list(v);
    if (!x) return "expected a comma-separated list of numbers, got '" + v + "'";
    c.*field = *x;
    return std::nullopt;
  };
}

template <typename E>
Setter choice(E RunConfig::*field, std::map<std::string, E> options) {
  return [field, options](const std::string& v, RunConfig& c,
                          Pending&) -> std::optional<std::string> {
    const auto it = options.find(v);
    if (it == options.end()) {
      std::string allowed;
      for (const auto& [k, _] : options) allowed += (allowed.empty() ? "" : "|") + k;
      return "expected one of " + allowed + ", got '" + v + "'";
    }
    c.*field = it->second;
    return std::nullopt;
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    t["run.mode"] = choice(&RunConfig::mode, std::map<std::string, Units>{
                                                 {"si", Units::si},
                                                 {"dimensionless", Units::dimensionless}});
    t["run.scenario"] = choice(&RunConfig::scenario,
                               std::map<std::string, Scenario>{
                                   {"derive-params", Scenario::derive_params},
                                   {"fig2", Scenario::fig2},
                                   {"fig4", Scenario::fig4},
                                   {"oracle-check", Scenario::oracle_check},
                                   {"sw-check", Scenario::sw_check},
                                   {"sweep", Scenario::sweep}});
    t["run.output"] = [](const std::string& v, RunConfig& c, Pending&) -> std::optional<std::string> {
      c.output_dir = v;
      return std::nullopt;
    };
    t["run.threads"] = number(&RunConfig::threads);
    t["model.omega_a"] = number(&RunConfig::omega_a);
    t["model.g"] = number(&RunConfig::g);
    t["model.theta"] = number(&RunConfig::theta);
    t["circuit.C_J"] = circuit_number(&CircuitParams::C_J);
    t["circuit.C_g"] = circuit_number(&CircuitParams::C_g);
    t["circuit.L"] = circuit_number(&CircuitParams::L);
    t["circuit.E_J0"] = circuit_number(&CircuitParams::E_J0);
    t["circuit.phi_x"] = circuit_number(&CircuitParams::phi_x);
    t["circuit.n_g"] = [](const std::string& v, RunConfig& c, Pending& p) -> std::optional<std::string> {
      const auto x = to_double(v);
      if (!x) return "expected a number, got '" + v + "'";
      c.circuit.n_g = *x;
      p.n_g_set = true;
      return std::nullopt;
    };
    t["circuit.V_g"] = [](const std::string& v, RunConfig&, Pending& p) -> std::optional<std::string> {
      const auto x = to_double(v);
      if (!x) return "expected a number, got '" + v + "'";
      p.v_g = *x;
      return std::nullopt;
    };
    t["circuit.E_J0_unit"] = [](const std::string& v, RunConfig&, Pending& p) -> std::optional<std::string> {
      if (v == "kelvin") p.ej_kelvin = true;
      else if (v == "joule") p.ej_kelvin = false;
      else return "expected kelvin|joule, got '" + v + "'";
      return std::nullopt;
    };
    t["circuit.convention"] =
        choice(&RunConfig::convention,
               std::map<std::string, CapacitanceConvention>{
                   {"series_C", CapacitanceConvention::series_c},
                   {"junction_C", CapacitanceConvention::junction_c}});
    t["curve.alpha"] = number_list(&RunConfig::alphas);
    t["curve.alpha_phase"] = number(&RunConfig::alpha_phase);
    t["curve.dim"] = number(&RunConfig::dim);
    t["curve.fock_alpha_max"] = number(&RunConfig::fock_alpha_max);
    t["curve.envelope"] = [](const std::string& v, RunConfig& c, Pending&) -> std::optional<std::string> {
      if (v == "approx") c.exact_envelope = false;
      else if (v == "exact") c.exact_envelope = true;
      else return "expected approx|exact, got '" + v + "'";
      return std::nullopt;
    };
    t["grid.t_max"] = [](const std::string& v, RunConfig& c, Pending&) -> std::optional<std::string> {
      const auto x = to_double(v);
      if (!x) return "expected a number, got '" + v + "'";
      c.t_max = *x;
      return std::nullopt;
    };
    t["grid.periods"] = number(&RunConfig::periods);
    t["grid.samples"] = number(&RunConfig::samples);
    t["sweep.parameter"] = choice(&RunConfig::sweep_parameter,
                                  std::map<std::string, SweepParameter>{
                                      {"g", SweepParameter::g},
                                      {"omega_a", SweepParameter::omega_a},
                                      {"alpha", SweepParameter::alpha}});
    t["sweep.values"] = number_list(&RunConfig::sweep_values);
    return t;
  }();
  return table;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.')) return false;
  }
  return s.front() != '.' && s.back() != '.';
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : Error(describe(issues)), issues_(std::move(issues)) {}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  Pending pending;
  std::vector<ConfigIssue> issues;
  std::map<std::string, int> seen;
  std::string section;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || !valid_identifier(trim(line.substr(1, line.size() - 2)))) {
        issues.push_back({line_no, "", "malformed section header '" + line + "'"});
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      issues.push_back({line_no, "", "expected 'key = value', got '" + line + "'"});
      continue;
    }
    const std::string name = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_identifier(name)) {
      issues.push_back({line_no, name, "malformed key"});
      continue;
    }
    const std::string key = section.empty() ? name : section + "." + name;
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) {
      issues.push_back({line_no, key, "unknown key"});
      continue;
    }
    if (const auto prev = seen.find(key); prev != seen.end()) {
      issues.push_back({line_no, key,
                        "duplicate key (first set on line " + std::to_string(prev->second) + ")"});
      continue;
    }
    seen[key] = line_no;
    if (auto err = it->second(value, c, pending)) issues.push_back({line_no, key, *err});
  }

  auto missing = [&](const std::string& key) {
    issues.push_back({0, key, "missing required key"});
  };
  auto line_of = [&](const std::string& key) {
    const auto it = seen.find(key);
    return it == seen.end() ? 0 : it->second;
  };

  if (!seen.count("run.scenario")) missing("run.scenario");

  if (pending.ej_kelvin) c.circuit.E_J0 = CircuitParams::kelvin_to_joule(c.circuit.E_J0);
  if (pending.v_g) {
    if (pending.n_g_set) {
      issues.push_back({line_of("circuit.V_g"), "circuit.V_g", "set either n_g or V_g, not both"});
    } else {
      c.circuit.n_g = CircuitParams::gate_charge_from_voltage(c.circuit.C_g, *pending.v_g);
    }
  }

  if (c.mode == Units::si) {
    for (const char* key : {"circuit.C_J", "circuit.C_g", "circuit.L", "circuit.E_J0"}) {
      if (!seen.count(key)) missing(key);
    }
    if (seen.count("circuit.C_J") && !(c.circuit.C_J > 0.0))
      issues.push_back({line_of("circuit.C_J"), "circuit.C_J", "must be > 0"});
    if (seen.count("circuit.C_g") && !(c.circuit.C_g > 0.0))
      issues.push_back({line_of("circuit.C_g"), "circuit.C_g", "must be > 0"});
    if (seen.count("circuit.L") && !(c.circuit.L > 0.0))
      issues.push_back({line_of("circuit.L"), "circuit.L", "must be > 0"});
    if (seen.count("circuit.E_J0") && !(c.circuit.E_J0 >= 0.0))
      issues.push_back({line_of("circuit.E_J0"), "circuit.E_J0", "must be >= 0"});
    if (c.scenario == Scenario::sweep && c.sweep_parameter != SweepParameter::alpha) {
      issues.push_back({line_of("sweep.parameter"), "sweep.parameter",
                        "SI runs can only sweep alpha"});
    }
  } else {
    if (!(c.omega_a > 0.0)) issues.push_back({line_of("model.omega_a"), "model.omega_a", "must be > 0"});
    if (!(c.g >= 0.0)) issues.push_back({line_of("model.g"), "model.g", "must be >= 0"});
  }

  const bool sweeps_alpha = c.scenario == Scenario::sweep && c.sweep_parameter == SweepParameter::alpha;
  const bool needs_alpha = c.scenario == Scenario::fig2 || c.scenario == Scenario::fig4 ||
                           c.scenario == Scenario::oracle_check ||
                           (c.scenario == Scenario::sweep && !sweeps_alpha);
  if (needs_alpha && c.alphas.empty()) {
    if (seen.count("curve.alpha")) {
      issues.push_back({line_of("curve.alpha"), "curve.alpha",
                        "alpha list must be nonempty for scenario " + to_string(c.scenario)});
    } else {
      missing("curve.alpha");
    }
  }
  for (double a : c.alphas) {
    if (a < 0.0) {
      issues.push_back({line_of("curve.alpha"), "curve.alpha", "alpha magnitudes must be >= 0"});
      break;
    }
  }
  if (c.scenario == Scenario::sweep && c.sweep_values.empty()) {
    if (seen.count("sweep.values")) {
      issues.push_back({line_of("sweep.values"), "sweep.values", "sweep values must be nonempty"});
    } else {
      missing("sweep.values");
    }
  }
  if (c.samples < 2) issues.push_back({line_of("grid.samples"), "grid.samples", "must be >= 2"});
  if (c.t_max && !(*c.t_max > 0.0)) issues.push_back({line_of("grid.t_max"), "grid.t_max", "must be > 0"});
  if (!(c.periods > 0.0)) issues.push_back({line_of("grid.periods"), "grid.periods", "must be > 0"});
  if (c.dim < 2) issues.push_back({line_of("curve.dim"), "curve.dim", "must be >= 2"});
  if (c.threads < 1) issues.push_back({line_of("run.threads"), "run.threads", "must be >= 1"});

  if (!issues.empty()) throw ConfigError(std::move(issues));
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({{0, "", "cannot read config file '" + path + "'"}});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[run]\n";
  os << "mode = " << to_string(c.mode) << "\n";
  os << "scenario = " << to_string(c.scenario) << "\n";
  if (!c.output_dir.empty()) os << "output = " << c.output_dir << "\n";
  os << "threads = " << c.threads << "\n";
  os << "\n[model]\n";
  os << "omega_a = " << fmt(c.omega_a) << "\n";
  os << "g = " << fmt(c.g) << "\n";
  os << "theta = " << fmt(c.theta) << "\n";
  os << "\n[circuit]\n";
  os << "C_J = " << fmt(c.circuit.C_J) << "\n";
  os << "C_g = " << fmt(c.circuit.C_g) << "\n";
  os << "L = " << fmt(c.circuit.L) << "\n";
  os << "E_J0 = " << fmt(c.circuit.E_J0) << "\n";
  os << "E_J0_unit = joule\n";
  os << "phi_x = " << fmt(c.circuit.phi_x) << "\n";
  os << "n_g = " << fmt(c.circuit.n_g) << "\n";
  os << "convention = " << to_string(c.convention) << "\n";
  os << "\n[curve]\n";
  os << "alpha = " << fmt_list(c.alphas) << "\n";
  os << "alpha_phase = " << fmt(c.alpha_phase) << "\n";
  os << "dim = " << c.dim << "\n";
  os << "fock_alpha_max = " << fmt(c.fock_alpha_max) << "\n";
  os << "envelope = " << (c.exact_envelope ? "exact" : "approx") << "\n";
  os << "\n[grid]\n";
  if (c.t_max) os << "t_max = " << fmt(*c.t_max) << "\n";
  os << "periods = " << fmt(c.periods) << "\n";
  os << "samples = " << c.samples << "\n";
  os << "\n[sweep]\n";
  os << "parameter = " << to_string(c.sweep_parameter) << "\n";
  os << "values = " << fmt_list(c.sweep_values) << "\n";
  return os.str();
}

std::string physics_fingerprint_text(const RunConfig& c) {
  RunConfig copy = c;
  copy.output_dir.clear();
  copy.threads = 1;
  return emit_config(copy);
}

}  // namespace pdq
