#include <Eigen/SVD>

#include <cmath>
#include <sstream>
#include <vector>

#include "pdq/hamiltonians.hpp"

namespace pdq {

namespace {

// Effective Hamiltonian of one dressed branch in the bare oscillator basis:
// polar factor W of the bare/dressed overlap block gives H_eff = W E W^dagger,
// which equals the direct-rotation (minimal) block-diagonalising transform.
CMatrix branch_block(const Spectrum& sp, int dim, int qubit) {
  const Eigen::Index n = sp.values.size();
  std::vector<Eigen::Index> cols;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double weight = sp.vectors.col(j).segment(qubit * dim, dim).squaredNorm();
    if (weight > 0.5) cols.push_back(j);
  }
  if (Eigen::Index(cols.size()) != dim) {
    std::ostringstream os;
    os << "dressed branch " << qubit << " has " << cols.size() << " states, expected " << dim
       << " (branches mix; too close to resonance?)";
    throw NumericError(os.str());
  }
  CMatrix overlap(dim, dim);
  RVector energies(dim);
  for (int c = 0; c < dim; ++c) {
    overlap.col(c) = sp.vectors.col(cols[c]).segment(qubit * dim, dim);
    energies(c) = sp.values(cols[c]);
  }
  Eigen::JacobiSVD<CMatrix> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() < 0.5) {
    throw NumericError("branch overlap block is near singular; block diagonalisation ill-defined");
  }
  const CMatrix w = svd.matrixU() * svd.matrixV().adjoint();
  return w * energies.asDiagonal() * w.adjoint();
}

BranchFit fit_branch(const CMatrix& block, int levels, int k, const ModelParams& m) {
  const OscillatorSpace space(int(block.rows()));
  const CMatrix a = annihilation_op<cplx>(space);
  const CMatrix sq_full = a * a + (a * a).adjoint();
  const CMatrix n_full = number_op<cplx>(space);

  const CMatrix target = block.topLeftCorner(levels, levels);
  const CMatrix basis[3] = {n_full.topLeftCorner(levels, levels),
                            sq_full.topLeftCorner(levels, levels),
                            CMatrix::Identity(levels, levels)};
  const Eigen::Index entries = Eigen::Index(levels) * levels;
  Eigen::MatrixXd design(2 * entries, 3);
  Eigen::VectorXd rhs(2 * entries);
  for (int b = 0; b < 3; ++b) {
    Eigen::Map<const CVector> flat(basis[b].data(), entries);
    design.col(b).head(entries) = flat.real();
    design.col(b).tail(entries) = flat.imag();
  }
  Eigen::Map<const CVector> flat_t(target.data(), entries);
  rhs.head(entries) = flat_t.real();
  rhs.tail(entries) = flat_t.imag();
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);

  BranchFit f;
  f.branch = k;
  f.omega_tilde_fit = coef(0);
  f.lambda_fit = coef(1);
  f.constant_fit = coef(2);
  f.omega_tilde_expected = m.omega_tilde;
  f.lambda_expected = (k == 0 ? 1.0 : -1.0) * m.lambda;
  f.omega_tilde_rel_dev = std::abs(f.omega_tilde_fit - m.omega_tilde) / std::abs(m.omega_tilde);
  const double lam = std::abs(m.lambda);
  f.lambda_rel_dev = lam > 0.0 ? std::abs(std::abs(f.lambda_fit) - lam) / lam
                               : std::abs(f.lambda_fit);
  const CMatrix resid = target - coef(0) * basis[0] - coef(1) * basis[1] - coef(2) * basis[2];
  f.fit_residual = resid.cwiseAbs().maxCoeff();
  return f;
}

}  // namespace

DiscrepancyReport schrieffer_wolff_check(const ModelParams& m, const SchriefferWolffOptions& opt) {
  if (m.gamma > kGammaThreshold) {
    std::ostringstream os;
    os << "Schrieffer-Wolff check requires gamma <= " << kGammaThreshold << ", got " << m.gamma;
    throw RegimeError(os.str());
  }
  if (opt.fit_levels < 3 || opt.fit_levels > opt.dim / 2) {
    throw InvalidArgument("fit_levels must lie in [3, dim/2]");
  }
  const OscillatorSpace space(opt.dim);
  const HermitianOperator h = build_full_hamiltonian(m, space);
  const Spectrum& sp = h.spectrum();

  DiscrepancyReport r;
  r.params = m;
  r.dim = opt.dim;
  r.fit_levels = opt.fit_levels;
  for (int k = 0; k < 2; ++k) {
    r.branches[k] = fit_branch(branch_block(sp, opt.dim, k), opt.fit_levels, k, m);
  }
  return r;
}

}  // namespace pdq
