#include "pdq/fock.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace pdq {

namespace {

constexpr double kHermitianTol = 1e-12;

int suggest_larger(int dim) { return dim + dim / 2 + 8; }

}  // namespace

OscillatorSpace::OscillatorSpace(int dim) : dim_(dim) {
  if (dim < 2) {
    throw InvalidArgument("oscillator space needs dim >= 2, got " +
                          std::to_string(dim));
  }
}

Eigen::Matrix2cd qubit_op(QubitOp which) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (which) {
    case QubitOp::sigma_x:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case QubitOp::sigma_y:
      // -i(|1><0| - |0><1|)
      m(1, 0) = -kI;
      m(0, 1) = kI;
      break;
    case QubitOp::sigma_z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case QubitOp::projector_0:
      m(0, 0) = 1.0;
      break;
    case QubitOp::projector_1:
      m(1, 1) = 1.0;
      break;
  }
  return m;
}

CMatrix tensor(const Eigen::Ref<const CMatrix>& qubit_part,
               const Eigen::Ref<const CMatrix>& osc_part) {
  if (qubit_part.rows() != 2 || qubit_part.cols() != 2) {
    throw DimensionMismatch("tensor: qubit factor must be 2x2");
  }
  if (osc_part.rows() != osc_part.cols() || osc_part.rows() < 2) {
    throw DimensionMismatch("tensor: oscillator factor must be square");
  }
  const Eigen::Index d = osc_part.rows();
  CMatrix out(2 * d, 2 * d);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) out.block(p * d, q * d, d, d) = qubit_part(p, q) * osc_part;
  return out;
}

double hermiticity_defect(const Eigen::Ref<const CMatrix>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(CMatrix m)
    : matrix_(std::move(m)), defect_(hermiticity_defect(matrix_)),
      cache_(std::make_shared<Cache>()) {
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if (!(defect_ <= kHermitianTol * scale)) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max |M - M^dagger| = " << defect_ << ")";
    throw NotHermitian(os.str());
  }
}

const Spectrum& HermitianOperator::spectrum() const {
  std::call_once(cache_->once, [this] {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_);
    if (solver.info() != Eigen::Success) {
      throw NumericError("Hermitian eigendecomposition did not converge");
    }
    cache_->spectrum.values = solver.eigenvalues();
    cache_->spectrum.vectors = solver.eigenvectors();
  });
  return cache_->spectrum;
}

Spectrum hermitian_eig(const HermitianOperator& h) { return h.spectrum(); }

OscState::OscState(CVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) throw InvalidArgument("oscillator state needs dim >= 2");
  const double norm = amps_.norm();
  if (!(norm > 0.0)) throw InvalidArgument("oscillator state has zero norm");
  amps_ /= norm;
}

JointState::JointState(CVector amplitudes, const OscillatorSpace& space)
    : amps_(std::move(amplitudes)), osc_dim_(space.dim()) {
  if (amps_.size() != 2 * osc_dim_) {
    throw DimensionMismatch("joint state length must be 2*dim");
  }
  const double norm = amps_.norm();
  if (!(norm > 0.0)) throw InvalidArgument("joint state has zero norm");
  amps_ /= norm;
}

JointState product_state(cplx c0, cplx c1, const OscState& s) {
  const int d = s.dim();
  CVector v(2 * d);
  v.head(d) = c0 * s.amplitudes();
  v.tail(d) = c1 * s.amplitudes();
  return JointState(std::move(v), s.space());
}

double coherent_tail_mass(cplx alpha, int dim) {
  const double mean = std::norm(alpha);
  if (mean == 0.0) return dim >= 1 ? 0.0 : 1.0;
  const double log_abs = std::log(std::abs(alpha));
  double tail = 0.0;
  for (int n = std::max(dim, 0);; ++n) {
    const double term = std::exp(-mean + 2.0 * n * log_abs - std::lgamma(n + 1.0));
    tail += term;
    if (n > mean && term < 1e-300 + 1e-17 * tail) break;
    if (n > dim + 100000) break;
  }
  return tail;
}

int minimal_coherent_dim(cplx alpha, double tol) {
  int dim = 2;
  while (coherent_tail_mass(alpha, dim) >= tol) {
    ++dim;
  }
  return dim;
}

OscState coherent_state(cplx alpha, const OscillatorSpace& space) {
  const int d = space.dim();
  const double tail = coherent_tail_mass(alpha, d);
  if (tail >= 1e-12) {
    const int need = minimal_coherent_dim(alpha);
    std::ostringstream os;
    os << "coherent state |alpha|=" << std::abs(alpha) << " needs dim >= " << need
       << " (tail mass " << tail << " at dim " << d << ")";
    throw TruncationError(os.str(), need);
  }
  CVector v = CVector::Zero(d);
  if (alpha == cplx(0.0)) {
    v(0) = 1.0;
    return OscState(std::move(v));
  }
  const double log_abs = std::log(std::abs(alpha));
  const double phase = std::arg(alpha);
  const double mean = std::norm(alpha);
  for (int n = 0; n < d; ++n) {
    const double mag = std::exp(-0.5 * mean + n * log_abs - 0.5 * std::lgamma(n + 1.0));
    v(n) = std::polar(mag, n * phase);
  }
  return OscState(std::move(v));
}

OscState fock_state(int n, const OscillatorSpace& space) {
  if (n < 0 || n >= space.dim()) throw InvalidArgument("Fock level outside truncation");
  CVector v = CVector::Zero(space.dim());
  v(n) = 1.0;
  return OscState(std::move(v));
}

double top_level_population(const CVector& amps, int osc_dim, int levels) {
  levels = std::min(levels, osc_dim);
  double pop = 0.0;
  for (Eigen::Index block = 0; block * osc_dim < amps.size(); ++block) {
    pop += amps.segment(block * osc_dim + osc_dim - levels, levels).squaredNorm();
  }
  return pop;
}

CVector evolve(const HermitianOperator& h, const CVector& v, double t) {
  if (v.size() != h.rows()) throw DimensionMismatch("evolve: state/operator size mismatch");
  if (t == 0.0) return v;
  const Spectrum& sp = h.spectrum();
  CVector c = sp.vectors.adjoint() * v;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::polar(1.0, -sp.values(i) * t);
  return sp.vectors * c;
}

namespace {

void guard_leakage(const CVector& amps, int osc_dim, double t) {
  const double leak = top_level_population(amps, osc_dim);
  if (leak > kLeakageTolerance) {
    std::ostringstream os;
    os << "truncation leakage " << leak << " at t=" << t << " exceeds "
       << kLeakageTolerance << " (dim " << osc_dim << ")";
    throw TruncationError(os.str(), suggest_larger(osc_dim));
  }
}

}  // namespace

OscState evolve(const HermitianOperator& h, const OscState& s, double t) {
  CVector out = evolve(h, s.amplitudes(), t);
  guard_leakage(out, s.dim(), t);
  return OscState(std::move(out));
}

JointState evolve(const HermitianOperator& h, const JointState& s, double t) {
  CVector out = evolve(h, s.amplitudes(), t);
  guard_leakage(out, s.osc_dim(), t);
  return JointState(std::move(out), s.space());
}

cplx overlap(const CVector& bra, const CVector& ket) {
  if (bra.size() != ket.size()) throw DimensionMismatch("overlap: dimension mismatch");
  return bra.dot(ket);  // Eigen's dot conjugates the first argument
}

cplx overlap(const OscState& bra, const OscState& ket) {
  return overlap(bra.amplitudes(), ket.amplitudes());
}

cplx overlap(const JointState& bra, const JointState& ket) {
  return overlap(bra.amplitudes(), ket.amplitudes());
}

cplx expectation(const Eigen::Ref<const CMatrix>& m, const CVector& v) {
  if (m.rows() != v.size() || m.cols() != v.size()) {
    throw DimensionMismatch("expectation: operator/state size mismatch");
  }
  return v.dot(m * v);
}

Eigen::Matrix2cd partial_trace_qubit(const JointState& s) {
  const CVector b0 = s.branch(0);
  const CVector b1 = s.branch(1);
  Eigen::Matrix2cd rho;
  rho(0, 0) = b0.squaredNorm();
  rho(1, 1) = b1.squaredNorm();
  rho(0, 1) = b1.dot(b0);  // sum_n b0_n conj(b1_n)
  rho(1, 0) = std::conj(rho(0, 1));
  return rho;
}

}  // namespace pdq
