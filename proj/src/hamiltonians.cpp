#include "pdq/hamiltonians.hpp"

#include <cmath>

namespace pdq {

HermitianOperator build_full_hamiltonian(const ModelParams& m, const OscillatorSpace& space) {
  const int d = space.dim();
  const CMatrix a = annihilation_op<cplx>(space);
  const CMatrix n = number_op<cplx>(space);
  const CMatrix quadrature = kI * (a - a.adjoint());  // Hermitian
  const CMatrix id_osc = CMatrix::Identity(d, d);
  const CMatrix id_q = Eigen::Matrix2cd::Identity();

  CMatrix h = m.omega * tensor(id_q, n);
  h -= 0.5 * m.omega_a * tensor(qubit_op(QubitOp::sigma_z), id_osc);
  h += m.g * tensor(qubit_op(QubitOp::sigma_y), quadrature);
  return HermitianOperator(std::move(h));
}

HermitianOperator build_effective_hamiltonian(int k, const ModelParams& m,
                                              const OscillatorSpace& space) {
  if (k != 0 && k != 1) throw InvalidArgument("branch index must be 0 or 1");
  const int d = space.dim();
  const CMatrix a = annihilation_op<cplx>(space);
  const CMatrix a2 = a * a;
  const double sign = k == 0 ? 1.0 : -1.0;
  CMatrix h = m.omega_tilde * number_op<cplx>(space);
  h += sign * m.lambda * (a2 + a2.adjoint());
  h += m.epsilon[k] * CMatrix::Identity(d, d);
  return HermitianOperator(std::move(h));
}

BogoliubovCoeffs squeeze_coefficients(int k, const ModelParams& m, double t) {
  if (k != 0 && k != 1) throw InvalidArgument("branch index must be 0 or 1");
  const double ratio = m.omega * m.delta / (m.omega * m.delta + 4.0 * m.g * m.g);
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw RegimeError("squeeze ratio omega*delta/(omega*delta + 4g^2) is not positive");
  }
  const double n_k = k == 0 ? m.N0 : m.N1;
  const double root = std::sqrt(n_k);
  BogoliubovCoeffs c;
  c.branch = k;
  c.time = t;
  c.mu = 0.5 * (root + 1.0 / root) * std::polar(1.0, m.Omega * t);
  c.nu = 0.5 * (root - 1.0 / root) * std::polar(1.0, -m.Omega * t);
  return c;
}

HeisenbergCoeffs heisenberg_coefficients(int k, const ModelParams& m, double t) {
  const BogoliubovCoeffs c0 = squeeze_coefficients(k, m, 0.0);
  const BogoliubovCoeffs ct = squeeze_coefficients(k, m, t);
  return {c0.mu * std::conj(ct.mu) - c0.nu * std::conj(ct.nu), c0.nu * ct.mu - c0.mu * ct.nu};
}

GaussianMoments predicted_moments(int k, const ModelParams& m, cplx alpha, double t) {
  const auto [u, v] = heisenberg_coefficients(k, m, t);
  const cplx mean = u * alpha + v * std::conj(alpha);
  return {mean, mean * mean + u * v, std::norm(mean) + std::norm(v)};
}

GaussianMoments measured_moments(const OscState& s) {
  const OscillatorSpace space = s.space();
  const CMatrix a = annihilation_op<cplx>(space);
  const CVector& psi = s.amplitudes();
  const CVector a_psi = a * psi;
  return {psi.dot(a_psi), psi.dot(a * a_psi), a_psi.squaredNorm()};
}

double DiscrepancyReport::max_omega_tilde_dev() const {
  return std::max(branches[0].omega_tilde_rel_dev, branches[1].omega_tilde_rel_dev);
}

double DiscrepancyReport::max_lambda_dev() const {
  return std::max(branches[0].lambda_rel_dev, branches[1].lambda_rel_dev);
}

}  // namespace pdq
