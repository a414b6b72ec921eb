#pragma once

// The decoherence factor D(t) = |<s_1(t)|s_0(t)>| evaluated by independent
// routes: closed form, its small-coupling simplification, a Fock-space
// overlap and a Gaussian (Bargmann) overlap, plus the normalised qubit
// coherence of the full model.

#include <numbers>
#include <string>
#include <vector>

#include "pdq/hamiltonians.hpp"

namespace pdq {

enum class CurveMethod { exact, approx, fock_oracle, gaussian_oracle, full_model };
std::string to_string(CurveMethod m);

/// G(t) = delta Omega / sqrt(delta^2 Omega^2 + 8 g^4 sin^2 Omega t)
double decoherence_prefactor(const ModelParams& m, double t);

/// G(t) exp(-8 g^4 sin^2(Omega t) |alpha|^2 / (delta^2 Omega^2 + 8 g^4 sin^2 Omega t))
double decoherence_exact(const ModelParams& m, cplx alpha, double t);

/// exp(-8 g^4 sin^2(Omega t) |alpha|^2 / (delta^2 Omega^2))
double decoherence_approx(const ModelParams& m, cplx alpha, double t);

/// Both branch states propagated in the truncated Fock space. Reuse the
/// branch operators across many times through FockOracle.
class FockOracle {
 public:
  FockOracle(const ModelParams& m, cplx alpha, const OscillatorSpace& space);
  /// <s_1(t)|s_0(t)>, including the branch constants epsilon_k.
  cplx branch_overlap(double t) const;
  double decoherence(double t) const { return std::abs(branch_overlap(t)); }
  /// Branch states at time t (leakage-guarded).
  OscState branch_state(int k, double t) const;

 private:
  HermitianOperator h0_, h1_;
  OscState initial_;
};

double decoherence_fock_oracle(const ModelParams& m, cplx alpha, double t,
                               const OscillatorSpace& space);

/// Bargmann parameters of a branch state f(z) = exp(c + b z + A z^2 / 2).
struct BargmannGaussian {
  cplx c;
  cplx b;
  cplx A;
};

/// e^{-iH_k t}|alpha> in Bargmann form, built from the Heisenberg pair (u, v):
/// b = alpha / conj(u), A = v / conj(u), with the phase of c tracked
/// continuously through the branch cuts of log conj(u).
BargmannGaussian branch_gaussian(int k, const ModelParams& m, cplx alpha, double t);

/// Squared norm of a Bargmann Gaussian (1 for physical states).
double gaussian_norm2(const BargmannGaussian& f);

/// <f1|f0> = integral d^2z/pi e^{-|z|^2} conj(f1(z)) f0(z), closed form.
cplx gaussian_overlap(const BargmannGaussian& f1, const BargmannGaussian& f0);

/// <s_1(t)|s_0(t)> from the Gaussian route; cost independent of |alpha|.
cplx branch_overlap_gaussian(const ModelParams& m, cplx alpha, double t);

double decoherence_gaussian_oracle(const ModelParams& m, cplx alpha, double t);

/// Exact propagation of (c0|0> + c1|1>) (x) |alpha> under the full
/// Hamiltonian; reuse across times.
class FullModel {
 public:
  FullModel(const ModelParams& m, cplx c0, cplx c1, cplx alpha, const OscillatorSpace& space);
  JointState state(double t) const;
  /// |rho_01(t)| / |c0 c1|
  double coherence(double t) const;
  const HermitianOperator& hamiltonian() const { return h_; }

 private:
  HermitianOperator h_;
  JointState initial_;
  double norm_;
};

double full_model_coherence(const ModelParams& m, cplx c0, cplx c1, cplx alpha, double t,
                            const OscillatorSpace& space);

struct JumpMetrics {
  double period = 0.0;  // pi / Omega
  double d_min = 0.0;
  double t_min = 0.0;   // pi / (2 Omega)
};

JumpMetrics jump_metrics(const ModelParams& m, cplx alpha);

/// Uniform time grid t_i = i * t_max / (samples - 1).
std::vector<double> uniform_grid(double t_max, int samples);

struct DecoherenceCurve {
  std::vector<double> times;
  std::vector<double> values;
  CurveMethod method = CurveMethod::exact;
  ModelParams params;
  cplx alpha;
};

struct CurveOptions {
  int dim = 64;              // fock_oracle / full_model
  cplx c0 = std::numbers::sqrt2 / 2;  // full_model
  cplx c1 = std::numbers::sqrt2 / 2;
  int threads = 1;
};

/// Samples D(t) on the grid; results ordered by grid index for any thread count.
DecoherenceCurve sample_curve(CurveMethod method, const ModelParams& m, cplx alpha,
                              const std::vector<double>& times, const CurveOptions& opt = {});

}  // namespace pdq
