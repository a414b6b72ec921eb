#pragma once

// Circuit constants -> qubit/oscillator model parameters.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace pdq {

/// CODATA-2018 exact SI values.
namespace constants {
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck = 6.62607015e-34;              // J s
inline constexpr double hbar = planck / (2.0 * 3.14159265358979323846);
inline constexpr double boltzmann = 1.380649e-23;             // J/K
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge);  // Wb
}  // namespace constants

enum class Units { si, dimensionless };

enum class CapacitanceConvention {
  series_c,    // C = C_J C_g / (C_J + C_g)
  junction_c,  // C = C_J
};

std::string to_string(CapacitanceConvention c);
std::string to_string(Units u);

struct CircuitParams {
  double C_J = 0.0;    // F
  double C_g = 0.0;    // F
  double L = 0.0;      // H
  double E_J0 = 0.0;   // J, single junction
  double phi_x = 0.0;  // Wb
  double n_g = 0.5;

  static double kelvin_to_joule(double kelvin) { return kelvin * constants::boltzmann; }
  /// n_g = C_g V_g / 2e
  static double gate_charge_from_voltage(double C_g, double V_g) {
    return C_g * V_g / (2.0 * constants::elementary_charge);
  }

  double series_capacitance() const { return C_J * C_g / (C_J + C_g); }
  double charging_energy() const;        // E_C = e^2 / 2(C_J + C_g)
  double josephson_energy() const;       // E_J(phi_x) = 2 E_J0 cos(pi phi_x / phi_0)
  void validate() const;
};

/// Dynamical parameters of the qubit-oscillator model plus the constants of
/// the dispersive channel. Frequencies are angular (rad/s in SI mode, units
/// of omega in dimensionless mode).
struct ModelParams {
  double omega = 1.0;
  double omega_a = 0.0;
  double g = 0.0;
  double theta = 0.0;  // mixing angle in (0, pi)

  double delta = 0.0;        // omega_a - omega
  double gamma = 0.0;        // g / |delta|
  double Omega = 0.0;        // sqrt(omega^2 + 4 g^2 omega / delta)
  double N0 = 1.0;           // sqrt(omega delta / (omega delta + 4 g^2))
  double N1 = 1.0;           // 1 / N0
  double omega_tilde = 0.0;  // omega + 2 g^2 / delta
  double lambda = 0.0;       // g^2 / delta
  std::array<double, 2> epsilon{};  // g^2/delta - (-1)^k omega_a / 2

  /// (2 pi / phi_0)(C / C_J); zero when not derived from a circuit.
  double eta_prime = 0.0;
  /// (hbar^2 L / 4C)^{1/4}; zero when not derived from a circuit.
  double flux_zpf = 0.0;

  Units units = Units::dimensionless;

  /// Fills every derived field; throws RegimeError at resonance or when the
  /// effective frequency is imaginary.
  static ModelParams make(double omega, double omega_a, double g, double theta,
                          Units units = Units::dimensionless);

  /// Same physics in units of omega (hbar = 1). Time scale factor is omega.
  ModelParams to_dimensionless() const;
};

/// omega = 1/sqrt(C_eff L); omega_a = sqrt(16 E_C^2 (1-2n_g)^2 + E_J^2)/hbar;
/// g = (pi E_J / phi_0 hbar)(C/C_J)(hbar^2 L / 4 C)^{1/4} with C the series
/// capacitance in the lever arm and C_eff in the oscillator factors.
ModelParams derive_params(const CircuitParams& c, CapacitanceConvention conv);

/// |1 - 2 n_g| that reproduces a target qubit splitting (rad/s) for the given
/// device; nullopt if E_J alone already exceeds it.
std::optional<double> implied_gate_offset(const CircuitParams& c, double omega_a_target);

/// Dimensionless parameter set with omega = 1. theta defaults to pi/2.
ModelParams params_from_dimensionless(double omega_ratio_a, double g_ratio,
                                      double theta = 1.5707963267948966);

struct RegimeCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = true;
  bool warn = false;
  bool applicable = true;
  std::string note;
};

struct RegimeReport {
  std::vector<RegimeCheck> checks;
  int suggested_dim = 0;
  bool pass() const;
  std::string to_text() const;
};

inline constexpr double kGammaThreshold = 0.15;
inline constexpr double kGammaWarn = 0.1;
inline constexpr double kWeakCouplingThreshold = 0.1;

RegimeReport validate_regime(const ModelParams& m, std::complex<double> alpha,
                             double phi_rms_estimate);

/// sqrt(<phi^2>) of a coherent state |alpha> (worst case over its phase).
double coherent_flux_rms(const ModelParams& m, std::complex<double> alpha);

}  // namespace pdq
