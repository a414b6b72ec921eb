#pragma once

#include <array>
#include <vector>

#include "pdq/circuit.hpp"
#include "pdq/fock.hpp"

namespace pdq {

/// H/hbar = omega a^dagger a - (omega_a/2) sigma_z + g sigma_y (x) i(a - a^dagger)
/// on the joint space, without the rotating-wave approximation.
HermitianOperator build_full_hamiltonian(const ModelParams& m, const OscillatorSpace& space);

/// H_k/hbar = omega_tilde a^dagger a + (-1)^k lambda (a^2 + a^dagger^2) + epsilon_k
/// on the oscillator space (k = 0, 1).
HermitianOperator build_effective_hamiltonian(int k, const ModelParams& m,
                                              const OscillatorSpace& space);

/// Time-dependent squeezing pair of branch k.
struct BogoliubovCoeffs {
  cplx mu;
  cplx nu;
  int branch = 0;
  double time = 0.0;

  /// |mu|^2 - |nu|^2 - 1
  double invariant_defect() const { return std::norm(mu) - std::norm(nu) - 1.0; }
};

/// mu_k = (sqrt(N_k) + 1/sqrt(N_k)) e^{+i Omega t} / 2,
/// nu_k = (sqrt(N_k) - 1/sqrt(N_k)) e^{-i Omega t} / 2.
BogoliubovCoeffs squeeze_coefficients(int k, const ModelParams& m, double t);

/// Heisenberg-picture ladder operator of branch k,
/// e^{iH_k t} a e^{-iH_k t} = u a + v a^dagger, expressed through the
/// squeezing pairs at times 0 and t:
///   u = mu(0) conj(mu(t)) - nu(0) conj(nu(t)),  v = nu(0) mu(t) - mu(0) nu(t).
struct HeisenbergCoeffs {
  cplx u;
  cplx v;
};
HeisenbergCoeffs heisenberg_coefficients(int k, const ModelParams& m, double t);

/// First and second moments of e^{-iH_k t}|alpha>.
struct GaussianMoments {
  cplx a;       // <a>
  cplx a2;      // <a^2>
  double n;     // <a^dagger a>
};
GaussianMoments predicted_moments(int k, const ModelParams& m, cplx alpha, double t);
GaussianMoments measured_moments(const OscState& s);

/// Comparison of numerically block-diagonalised branch Hamiltonians with the
/// dispersive-channel coefficients.
struct BranchFit {
  int branch = 0;
  double omega_tilde_fit = 0.0;
  double lambda_fit = 0.0;   // coefficient of (a^2 + a^dagger^2), signed
  double constant_fit = 0.0;
  double omega_tilde_expected = 0.0;
  double lambda_expected = 0.0;  // (-1)^k g^2 / delta
  double omega_tilde_rel_dev = 0.0;
  double lambda_rel_dev = 0.0;   // ||lambda_fit| - |lambda|| / |lambda|
  double fit_residual = 0.0;     // max entry of the unexplained part
};

struct DiscrepancyReport {
  ModelParams params;
  int dim = 0;
  int fit_levels = 0;
  std::array<BranchFit, 2> branches;
  double max_omega_tilde_dev() const;
  double max_lambda_dev() const;
};

struct SchriefferWolffOptions {
  int dim = 48;
  int fit_levels = 12;
};

/// Exact block diagonalisation of the full Hamiltonian (direct rotation onto
/// the dressed qubit-0 / qubit-1 eigenspaces), followed by a least-squares
/// projection of each block's low-lying corner onto
/// {a^dagger a, a^2 + a^dagger^2, 1}. Throws NumericError when the dressed
/// branches cannot be separated, RegimeError when gamma > 0.15.
DiscrepancyReport schrieffer_wolff_check(const ModelParams& m,
                                         const SchriefferWolffOptions& opt = {});

}  // namespace pdq
