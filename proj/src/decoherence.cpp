#include "pdq/decoherence.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>

#include "pdq/parallel.hpp"

namespace pdq {

std::string to_string(CurveMethod m) {
  switch (m) {
    case CurveMethod::exact: return "exact";
    case CurveMethod::approx: return "approx";
    case CurveMethod::fock_oracle: return "fock_oracle";
    case CurveMethod::gaussian_oracle: return "gaussian_oracle";
    case CurveMethod::full_model: return "full_model";
  }
  return "unknown";
}

namespace {

double coupling_fourth(const ModelParams& m) {
  const double g2 = m.g * m.g;
  return 8.0 * g2 * g2;
}

}  // namespace

double decoherence_prefactor(const ModelParams& m, double t) {
  const double s = std::sin(m.Omega * t);
  const double base = m.delta * m.delta * m.Omega * m.Omega;
  return std::abs(m.delta) * m.Omega / std::sqrt(base + coupling_fourth(m) * s * s);
}

double decoherence_exact(const ModelParams& m, cplx alpha, double t) {
  const double s = std::sin(m.Omega * t);
  const double jump = coupling_fourth(m) * s * s;
  const double base = m.delta * m.delta * m.Omega * m.Omega;
  return decoherence_prefactor(m, t) * std::exp(-jump * std::norm(alpha) / (base + jump));
}

double decoherence_approx(const ModelParams& m, cplx alpha, double t) {
  const double s = std::sin(m.Omega * t);
  const double base = m.delta * m.delta * m.Omega * m.Omega;
  return std::exp(-coupling_fourth(m) * s * s * std::norm(alpha) / base);
}

FockOracle::FockOracle(const ModelParams& m, cplx alpha, const OscillatorSpace& space)
    : h0_(build_effective_hamiltonian(0, m, space)),
      h1_(build_effective_hamiltonian(1, m, space)),
      initial_(coherent_state(alpha, space)) {}

OscState FockOracle::branch_state(int k, double t) const {
  return evolve(k == 0 ? h0_ : h1_, initial_, t);
}

cplx FockOracle::branch_overlap(double t) const {
  return overlap(branch_state(1, t), branch_state(0, t));
}

double decoherence_fock_oracle(const ModelParams& m, cplx alpha, double t,
                               const OscillatorSpace& space) {
  return FockOracle(m, alpha, space).decoherence(t);
}

BargmannGaussian branch_gaussian(int k, const ModelParams& m, cplx alpha, double t) {
  const auto [u, v] = heisenberg_coefficients(k, m, t);
  const cplx ubar = std::conj(u);
  const double w = m.omega_tilde;

  // Continuous branch of log(conj(u)): conj(u) = cos x + i (w/Omega) sin x
  // winds once per period of x = Omega t, in the sense of sign(w).
  const double x = m.Omega * t;
  const double principal = std::arg(ubar);
  const double follow = w >= 0.0 ? x : -x;
  const double two_pi = 2.0 * std::numbers::pi;
  const double arg = principal + two_pi * std::round((follow - principal) / two_pi);
  const cplx log_ubar(std::log(std::abs(ubar)), arg);

  BargmannGaussian f;
  f.b = alpha / ubar;
  f.A = v / ubar;
  f.c = -0.5 * std::norm(alpha) + kI * (0.5 * w * t) - 0.5 * log_ubar + 0.5 * alpha * alpha * f.A -
        kI * (m.epsilon[k] * t);
  return f;
}

namespace {

// exp(prefactor) * integral d^2z/pi exp(-|z|^2 + p1 z + p2 zbar + q1 z^2/2 + q2 zbar^2/2),
// combined in the exponent so large |alpha| does not overflow.
cplx gaussian_integral(cplx prefactor, cplx p1, cplx p2, cplx q1, cplx q2) {
  const cplx det = 1.0 - q1 * q2;
  return std::exp(prefactor + (p1 * p2 + 0.5 * (q1 * p2 * p2 + q2 * p1 * p1)) / det) / std::sqrt(det);
}

}  // namespace

double gaussian_norm2(const BargmannGaussian& f) {
  return gaussian_integral(f.c + std::conj(f.c), f.b, std::conj(f.b), f.A, std::conj(f.A)).real();
}

cplx gaussian_overlap(const BargmannGaussian& f1, const BargmannGaussian& f0) {
  return gaussian_integral(f0.c + std::conj(f1.c), f0.b, std::conj(f1.b), f0.A, std::conj(f1.A));
}

cplx branch_overlap_gaussian(const ModelParams& m, cplx alpha, double t) {
  return gaussian_overlap(branch_gaussian(1, m, alpha, t), branch_gaussian(0, m, alpha, t));
}

double decoherence_gaussian_oracle(const ModelParams& m, cplx alpha, double t) {
  return std::abs(branch_overlap_gaussian(m, alpha, t));
}

FullModel::FullModel(const ModelParams& m, cplx c0, cplx c1, cplx alpha,
                     const OscillatorSpace& space)
    : h_(build_full_hamiltonian(m, space)),
      initial_(product_state(c0, c1, coherent_state(alpha, space))),
      norm_(std::abs(c0 * c1) / (std::norm(c0) + std::norm(c1))) {
  if (norm_ == 0.0) throw InvalidArgument("coherence undefined for c0 * c1 = 0");
}

JointState FullModel::state(double t) const { return evolve(h_, initial_, t); }

double FullModel::coherence(double t) const {
  return std::abs(partial_trace_qubit(state(t))(0, 1)) / norm_;
}

double full_model_coherence(const ModelParams& m, cplx c0, cplx c1, cplx alpha, double t,
                            const OscillatorSpace& space) {
  return FullModel(m, c0, c1, alpha, space).coherence(t);
}

JumpMetrics jump_metrics(const ModelParams& m, cplx alpha) {
  if (!(m.g > 0.0)) throw RegimeError("no quantum jumps without coupling (g = 0)");
  JumpMetrics j;
  j.period = std::numbers::pi / m.Omega;
  j.t_min = 0.5 * j.period;
  j.d_min = decoherence_exact(m, alpha, j.t_min);
  return j;
}

std::vector<double> uniform_grid(double t_max, int samples) {
  if (samples < 2) throw InvalidArgument("grid needs at least 2 samples");
  if (!(t_max > 0.0)) throw InvalidArgument("grid needs t_max > 0");
  std::vector<double> t(samples);
  for (int i = 0; i < samples; ++i) t[i] = t_max * double(i) / double(samples - 1);
  return t;
}

DecoherenceCurve sample_curve(CurveMethod method, const ModelParams& m, cplx alpha,
                              const std::vector<double>& times, const CurveOptions& opt) {
  DecoherenceCurve curve;
  curve.times = times;
  curve.values.resize(times.size());
  curve.method = method;
  curve.params = m;
  curve.alpha = alpha;

  std::function<double(double)> eval;
  std::unique_ptr<FockOracle> fock;
  std::unique_ptr<FullModel> full;
  switch (method) {
    case CurveMethod::exact:
      eval = [&](double t) { return decoherence_exact(m, alpha, t); };
      break;
    case CurveMethod::approx:
      eval = [&](double t) { return decoherence_approx(m, alpha, t); };
      break;
    case CurveMethod::gaussian_oracle:
      eval = [&](double t) { return decoherence_gaussian_oracle(m, alpha, t); };
      break;
    case CurveMethod::fock_oracle:
      fock = std::make_unique<FockOracle>(m, alpha, OscillatorSpace(opt.dim));
      eval = [&](double t) { return fock->decoherence(t); };
      break;
    case CurveMethod::full_model:
      full = std::make_unique<FullModel>(m, opt.c0, opt.c1, alpha, OscillatorSpace(opt.dim));
      eval = [&](double t) { return full->coherence(t); };
      break;
  }
  parallel_for(times.size(), opt.threads, [&](std::size_t i) { curve.values[i] = eval(times[i]); });
  return curve;
}

}  // namespace pdq
