#include "pdq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pdq/errors.hpp"
#include "pdq/fock.hpp"

namespace pdq {

std::string to_string(CapacitanceConvention c) {
  return c == CapacitanceConvention::series_c ? "series_C" : "junction_C";
}

std::string to_string(Units u) { return u == Units::si ? "si" : "dimensionless"; }

double CircuitParams::charging_energy() const {
  const double e = constants::elementary_charge;
  return e * e / (2.0 * (C_J + C_g));
}

double CircuitParams::josephson_energy() const {
  return 2.0 * E_J0 * std::cos(std::numbers::pi * phi_x / constants::flux_quantum);
}

void CircuitParams::validate() const {
  if (!(C_J > 0.0) || !(C_g > 0.0) || !(L > 0.0)) {
    throw InvalidArgument("capacitances and inductance must be strictly positive");
  }
  if (!(E_J0 >= 0.0)) throw InvalidArgument("E_J0 must be non-negative");
  if (!std::isfinite(phi_x) || !std::isfinite(n_g)) {
    throw InvalidArgument("phi_x and n_g must be finite");
  }
}

ModelParams ModelParams::make(double omega, double omega_a, double g, double theta,
                              Units units) {
  if (!(omega > 0.0)) throw InvalidArgument("omega must be positive");
  if (!(omega_a > 0.0)) throw RegimeError("degenerate qubit splitting omega_a = 0");
  if (!(g >= 0.0)) throw InvalidArgument("coupling g must be non-negative");
  ModelParams m;
  m.omega = omega;
  m.omega_a = omega_a;
  m.g = g;
  m.theta = theta;
  m.units = units;
  m.delta = omega_a - omega;
  if (m.delta == 0.0 || std::abs(m.delta) < 1e-14 * omega) {
    throw RegimeError("resonance: omega_a == omega, dispersive channel undefined");
  }
  m.gamma = g / std::abs(m.delta);
  m.lambda = g * g / m.delta;
  m.omega_tilde = omega + 2.0 * m.lambda;
  const double omega_sq = omega * omega + 4.0 * g * g * omega / m.delta;
  if (!(omega_sq > 0.0)) {
    throw RegimeError("effective squeezing frequency is imaginary (omega*delta/(omega*delta+4g^2) <= 0)");
  }
  m.Omega = std::sqrt(omega_sq);
  m.N0 = std::sqrt(omega * m.delta / (omega * m.delta + 4.0 * g * g));
  m.N1 = 1.0 / m.N0;
  m.epsilon[0] = m.lambda - 0.5 * omega_a;
  m.epsilon[1] = m.lambda + 0.5 * omega_a;
  return m;
}

ModelParams ModelParams::to_dimensionless() const {
  ModelParams d = make(1.0, omega_a / omega, g / omega, theta, Units::dimensionless);
  d.eta_prime = eta_prime;
  d.flux_zpf = flux_zpf;
  return d;
}

ModelParams derive_params(const CircuitParams& c, CapacitanceConvention conv) {
  c.validate();
  const double hbar = constants::hbar;
  const double c_series = c.series_capacitance();
  const double c_eff = conv == CapacitanceConvention::series_c ? c_series : c.C_J;
  const double e_c = c.charging_energy();
  const double e_j = c.josephson_energy();
  const double bias = 1.0 - 2.0 * c.n_g;
  // cos(pi/2) leaves a ~1e-17 residue, so compare against the energy scale
  if (std::hypot(4.0 * e_c * bias, e_j) <= 1e-12 * std::max(e_c, 2.0 * c.E_J0)) {
    throw RegimeError("degenerate qubit: E_J = 0 at the charge degeneracy point");
  }
  const double omega = 1.0 / std::sqrt(c_eff * c.L);
  const double omega_a = std::hypot(4.0 * e_c * bias, e_j) / hbar;
  const double flux_zpf = std::pow(hbar * hbar * c.L / (4.0 * c_eff), 0.25);
  const double lever = c_series / c.C_J;
  const double g = std::abs(std::numbers::pi * e_j / (constants::flux_quantum * hbar) * lever * flux_zpf);
  const double theta = std::atan2(std::abs(e_j), 4.0 * e_c * bias);
  ModelParams m = ModelParams::make(omega, omega_a, g, theta, Units::si);
  m.eta_prime = 2.0 * std::numbers::pi / constants::flux_quantum * lever;
  m.flux_zpf = flux_zpf;
  return m;
}

std::optional<double> implied_gate_offset(const CircuitParams& c, double omega_a_target) {
  const double target = constants::hbar * omega_a_target;
  const double e_j = c.josephson_energy();
  const double rest = target * target - e_j * e_j;
  if (rest < 0.0) return std::nullopt;
  return std::sqrt(rest) / (4.0 * c.charging_energy());
}

ModelParams params_from_dimensionless(double omega_ratio_a, double g_ratio, double theta) {
  return ModelParams::make(1.0, omega_ratio_a, g_ratio, theta, Units::dimensionless);
}

double coherent_flux_rms(const ModelParams& m, std::complex<double> alpha) {
  // phi = phi_zpf (a + a^dagger); <phi^2> <= phi_zpf^2 (4|alpha|^2 + 1)
  return m.flux_zpf * std::sqrt(4.0 * std::norm(alpha) + 1.0);
}

bool RegimeReport::pass() const {
  for (const auto& c : checks)
    if (c.applicable && !c.pass) return false;
  return true;
}

std::string RegimeReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": ";
    if (!c.applicable) {
      os << "n/a";
    } else {
      os << c.value << " (threshold " << c.threshold << ") "
         << (c.pass ? (c.warn ? "WARN" : "PASS") : "FAIL");
    }
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
  }
  os << "suggested_dim: " << suggested_dim << "\n";
  return os.str();
}

RegimeReport validate_regime(const ModelParams& m, std::complex<double> alpha,
                             double phi_rms_estimate) {
  RegimeReport r;

  RegimeCheck gamma;
  gamma.name = "gamma = g/|omega_a - omega|";
  gamma.threshold = kGammaThreshold;
  gamma.value = m.delta == 0.0 ? std::numeric_limits<double>::infinity()
                               : m.g / std::abs(m.delta);
  gamma.pass = gamma.value <= kGammaThreshold;
  gamma.warn = gamma.pass && gamma.value > kGammaWarn;
  r.checks.push_back(gamma);

  RegimeCheck weak;
  weak.name = "weak coupling (C/C_J) sqrt<phi^2> 2pi/phi_0";
  weak.threshold = kWeakCouplingThreshold;
  if (m.eta_prime > 0.0) {
    weak.value = m.eta_prime * phi_rms_estimate;
    weak.pass = weak.value <= kWeakCouplingThreshold;
  } else {
    weak.applicable = false;
    weak.note = "no circuit lever arm (dimensionless parameters)";
  }
  r.checks.push_back(weak);

  // Squeezing broadens the photon distribution beyond the Poisson tail; the
  // maximal photon number grows by at most exp(2r) with sinh 2r = 2|lambda|/Omega.
  const int base = minimal_coherent_dim(alpha);
  const double stretch = m.Omega > 0.0 ? std::exp(std::asinh(2.0 * std::abs(m.lambda) / m.Omega)) : 1.0;
  r.suggested_dim = int(std::ceil(base * stretch * stretch)) + 16;
  RegimeCheck trunc;
  trunc.name = "truncation estimate for |alpha|";
  trunc.value = double(r.suggested_dim);
  trunc.note = "minimal dim for coherent tail < 1e-12 is " + std::to_string(base);
  r.checks.push_back(trunc);
  return r;
}

}  // namespace pdq
