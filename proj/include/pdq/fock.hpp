#pragma once

// Truncated Fock-space linear algebra for one qubit coupled to one bosonic
// mode. Joint vectors use qubit-slow / oscillator-fast ordering:
// index = qubit * dim + n.

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <mutex>

#include "pdq/errors.hpp"

namespace pdq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

/// Number of kept oscillator levels (0 .. dim-1).
class OscillatorSpace {
 public:
  explicit OscillatorSpace(int dim);
  int dim() const noexcept { return dim_; }
  bool operator==(const OscillatorSpace&) const = default;

 private:
  int dim_;
};

/// Ladder operator a with a(n-1, n) = sqrt(n).
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> annihilation_op(
    const OscillatorSpace& space) {
  const int d = space.dim();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = Scalar(std::sqrt(double(n)));
  return a;
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> creation_op(
    const OscillatorSpace& space) {
  return annihilation_op<Scalar>(space).adjoint();
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> number_op(
    const OscillatorSpace& space) {
  const int d = space.dim();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> n =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = Scalar(double(k));
  return n;
}

enum class QubitOp { sigma_x, sigma_y, sigma_z, projector_0, projector_1 };

/// Qubit operators in the rotated eigenbasis {|0>, |1>}:
/// sigma_z = |0><0| - |1><1|, sigma_y = -i(|1><0| - |0><1|),
/// sigma_x = |1><0| + |0><1|.
Eigen::Matrix2cd qubit_op(QubitOp which);

/// Kronecker product qubit (x) oscillator in the joint ordering.
CMatrix tensor(const Eigen::Ref<const CMatrix>& qubit_part,
               const Eigen::Ref<const CMatrix>& osc_part);

/// max_ij |M - M^dagger|_ij
double hermiticity_defect(const Eigen::Ref<const CMatrix>& m);

struct Spectrum {
  RVector values;   // ascending
  CMatrix vectors;  // columns, orthonormal
};

/// A Hermitian matrix (in angular-frequency units, i.e. H / hbar) together
/// with a lazily computed eigendecomposition. Copies share the cache; the
/// first call to spectrum() computes it under std::call_once.
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix m);

  const CMatrix& matrix() const noexcept { return matrix_; }
  int rows() const noexcept { return int(matrix_.rows()); }
  double certificate() const noexcept { return defect_; }
  const Spectrum& spectrum() const;

 private:
  struct Cache {
    std::once_flag once;
    Spectrum spectrum;
  };
  CMatrix matrix_;
  double defect_;
  std::shared_ptr<Cache> cache_;
};

/// Eigendecomposition of a Hermitian operator. Values ascending.
Spectrum hermitian_eig(const HermitianOperator& h);

/// Normalized oscillator state.
class OscState {
 public:
  explicit OscState(CVector amplitudes);
  const CVector& amplitudes() const noexcept { return amps_; }
  int dim() const noexcept { return int(amps_.size()); }
  OscillatorSpace space() const { return OscillatorSpace(dim()); }

 private:
  CVector amps_;
};

/// Normalized qubit (x) oscillator state, qubit-slow ordering.
class JointState {
 public:
  JointState(CVector amplitudes, const OscillatorSpace& space);
  const CVector& amplitudes() const noexcept { return amps_; }
  int osc_dim() const noexcept { return osc_dim_; }
  OscillatorSpace space() const { return OscillatorSpace(osc_dim_); }
  /// Oscillator amplitudes attached to qubit level q (unnormalized).
  CVector branch(int q) const { return amps_.segment(q * osc_dim_, osc_dim_); }

 private:
  CVector amps_;
  int osc_dim_;
};

/// (c0|0> + c1|1>) (x) s
JointState product_state(cplx c0, cplx c1, const OscState& s);

/// Poisson mass sum_{n >= dim} e^{-|a|^2} |a|^{2n} / n!
double coherent_tail_mass(cplx alpha, int dim);

/// Smallest dim whose coherent tail mass is below tol.
int minimal_coherent_dim(cplx alpha, double tol = 1e-12);

/// |alpha> truncated to space; throws TruncationError when the tail mass
/// is >= 1e-12.
OscState coherent_state(cplx alpha, const OscillatorSpace& space);

OscState fock_state(int n, const OscillatorSpace& space);

/// Population of the top `levels` oscillator levels (summed over qubit
/// blocks for joint vectors).
double top_level_population(const CVector& amps, int osc_dim, int levels = 5);

inline constexpr double kLeakageTolerance = 1e-8;

/// exp(-i H t) v using the cached spectrum. Raw vectors: no guard.
CVector evolve(const HermitianOperator& h, const CVector& v, double t);

/// Guarded evolution; throws TruncationError if the top five levels hold
/// more than kLeakageTolerance.
OscState evolve(const HermitianOperator& h, const OscState& s, double t);
JointState evolve(const HermitianOperator& h, const JointState& s, double t);

cplx overlap(const CVector& bra, const CVector& ket);
cplx overlap(const OscState& bra, const OscState& ket);
cplx overlap(const JointState& bra, const JointState& ket);

/// <v| M |v>
cplx expectation(const Eigen::Ref<const CMatrix>& m, const CVector& v);

/// rho_q = Tr_osc |psi><psi|; rho(0,1) = sum_n amp(0,n) conj(amp(1,n)).
Eigen::Matrix2cd partial_trace_qubit(const JointState& s);

}  // namespace pdq
