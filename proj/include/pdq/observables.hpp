#pragma once

// Probe-junction current and the Rabi-envelope decoherence metric.
// Currents are expressed in units of the electron charge per unit model
// time (multiply by e, and by omega for dimensionless runs, to get amperes).

#include <string>
#include <vector>

#include "pdq/decoherence.hpp"

namespace pdq {

enum class CurrentSource { analytic, numeric_full_model, uncoupled };
std::string to_string(CurrentSource s);

struct CurrentTrace {
  std::vector<double> times;
  std::vector<double> current;  // I / e
  CurrentSource source = CurrentSource::analytic;
};

/// P_c = Tr(rho |1>_c <1|_c) with |1>_c = sin(theta/2)|0> + cos(theta/2)|1>.
double charge_occupation(const JointState& s, double theta);

/// P_c of c0|0>|s_0(t)> + c1|1>|s_1(t)> using the Gaussian branch overlap:
/// sin^2(theta/2)|c0|^2 + cos^2(theta/2)|c1|^2 + sin(theta) Re(c0 conj(c1) <s_1|s_0>).
double charge_occupation_branches(const ModelParams& m, cplx alpha, double t,
                                  cplx c0 = std::numbers::sqrt2 / 2,
                                  cplx c1 = std::numbers::sqrt2 / 2);

enum class EnvelopeForm { approx, exact };

/// I/e = sin(theta) D(t) [omega_a sin(omega_a t) + omega kappa sin(2 Omega t) cos(omega_a t)],
/// kappa = 8 g^4 |alpha|^2 / (delta^2 Omega^2), for c0 = c1 = 1/sqrt(2).
/// D is the simplified form unless `form` asks for the exact one.
double current_analytic(const ModelParams& m, cplx alpha, double t,
                        EnvelopeForm form = EnvelopeForm::approx);

/// The g = 0 reference trace sin(theta) omega_a sin(omega_a t).
double current_uncoupled(const ModelParams& m, double t);

CurrentTrace sample_current_analytic(const ModelParams& m, cplx alpha,
                                     const std::vector<double>& times,
                                     EnvelopeForm form = EnvelopeForm::approx);

/// Largest admissible step 2 pi / (20 max(omega_a, Omega)).
double max_current_step(const ModelParams& m);

/// Full-model current -2 dP_c/dt by central differences on the (uniform) grid;
/// second-order one-sided differences at the end points.
CurrentTrace current_numeric(const ModelParams& m, cplx alpha, const std::vector<double>& times,
                             const OscillatorSpace& space, int threads = 1);

/// Derivative of samples on a uniform grid (central inside, one-sided ends).
std::vector<double> grid_derivative(const std::vector<double>& values, double dt);

struct EnvelopeMetrics {
  double carrier_period = 0.0;
  double modulation_period = 0.0;
  /// Fraction of each modulation period during which the envelope stays
  /// above its half-depth level; 1 for a flat envelope, small for sharp
  /// revival peaks.
  double envelope_width_ratio = 1.0;
  double modulation_depth = 0.0;  // (max - min) / (max + min)
  double edge_trim = 0.0;         // fraction dropped at each end
  int samples_used = 0;
};

inline constexpr double kEnvelopeEdgeTrim = 0.1;

/// Carrier from the dominant spectral peak, envelope from the analytic
/// signal magnitude (edges trimmed), modulation from the envelope spectrum.
EnvelopeMetrics envelope_metrics(const CurrentTrace& trace, const ModelParams& m);

}  // namespace pdq
