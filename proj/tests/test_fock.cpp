#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "pdq/fock.hpp"

using namespace pdq;

namespace {

double poisson(double mean, int n) {
  return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

CMatrix random_hermitian(int d, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cplx(nd(rng), nd(rng));
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("oscillator space rejects dim < 2") {
  CHECK_THROWS_AS(OscillatorSpace(1), InvalidArgument);
  CHECK_THROWS_AS(OscillatorSpace(0), InvalidArgument);
  CHECK(OscillatorSpace(2).dim() == 2);
}

TEST_CASE("annihilation operator matrix elements") {
  const auto a = annihilation_op<double>(OscillatorSpace(3));
  CHECK(a(0, 1) == doctest::Approx(1.0));
  CHECK(a(1, 2) == doctest::Approx(std::sqrt(2.0)));
  double others = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!((i == 0 && j == 1) || (i == 1 && j == 2))) others += std::abs(a(i, j));
  CHECK(others == 0.0);

  const OscillatorSpace s(8);
  const CVector out = annihilation_op<cplx>(s) * fock_state(0, s).amplitudes();
  CHECK(out.norm() == 0.0);

  const auto ac = annihilation_op<cplx>(s);
  CHECK((creation_op<cplx>(s) - ac.adjoint()).norm() == 0.0);
  CHECK((ac.adjoint() * ac - number_op<cplx>(s)).norm() < 1e-14);
}

TEST_CASE("coherent state properties") {
  const OscillatorSpace s(64);
  SUBCASE("alpha = 0 is the vacuum") {
    const OscState c = coherent_state(0.0, s);
    CHECK(std::abs(c.amplitudes()(0) - 1.0) < 1e-15);
    CHECK(c.amplitudes().tail(63).norm() == 0.0);
  }
  SUBCASE("<a> and <n>") {
    const OscState half = coherent_state(0.5, s);
    CHECK(std::abs(expectation(annihilation_op<cplx>(s), half.amplitudes()) - 0.5) < 1e-10);
    const OscState two = coherent_state(2.0, s);
    CHECK(std::abs(expectation(number_op<cplx>(s), two.amplitudes()).real() - 4.0) < 1e-9);
  }
  SUBCASE("unit norm and Poisson distribution") {
    for (cplx alpha : {cplx(0.3, 0.0), cplx(1.0, -2.0), cplx(-3.0, 1.5)}) {
      const OscState c = coherent_state(alpha, s);
      CHECK(std::abs(c.amplitudes().norm() - 1.0) < 1e-12);
      for (int n = 0; n < 64; ++n) {
        CHECK(std::abs(std::norm(c.amplitudes()(n)) - poisson(std::norm(alpha), n)) < 1e-10);
      }
    }
  }
  SUBCASE("phase of the amplitudes follows alpha^n") {
    const cplx alpha = std::polar(1.3, 0.7);
    const OscState c = coherent_state(alpha, s);
    for (int n = 1; n < 10; ++n) {
      const cplx ratio = c.amplitudes()(n) / c.amplitudes()(n - 1);
      CHECK(std::abs(ratio - alpha / std::sqrt(double(n))) < 1e-12);
    }
  }
  SUBCASE("too small a space reports the minimal dim") {
    try {
      coherent_state(5.0, OscillatorSpace(30));
      FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
      const int need = e.suggested_dim();
      CHECK(need == minimal_coherent_dim(5.0));
      CHECK(coherent_tail_mass(5.0, need) < 1e-12);
      CHECK(coherent_tail_mass(5.0, need - 1) >= 1e-12);
      CHECK_NOTHROW(coherent_state(5.0, OscillatorSpace(need)));
    }
  }
  SUBCASE("large amplitudes stay finite") {
    const int need = minimal_coherent_dim(30.0);
    const OscState c = coherent_state(30.0, OscillatorSpace(need));
    CHECK(std::isfinite(c.amplitudes().norm()));
    CHECK(std::abs(c.amplitudes().norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("qubit operators follow the stated conventions") {
  const auto sx = qubit_op(QubitOp::sigma_x);
  const auto sy = qubit_op(QubitOp::sigma_y);
  const auto sz = qubit_op(QubitOp::sigma_z);
  Eigen::Vector2cd zero(1.0, 0.0), one(0.0, 1.0);
  CHECK(((sz * zero) - zero).norm() == 0.0);
  CHECK(((sz * one) + one).norm() == 0.0);
  CHECK((sy * sy - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
  // with sigma_y = -i(|1><0| - |0><1|) the commutator comes out as -2i sigma_z
  CHECK((sx * sy - sy * sx + 2.0 * kI * sz).norm() < 1e-15);
  // sigma_y = -i(|1><0| - |0><1|)
  CHECK(std::abs(sy(1, 0) + kI) == 0.0);
  CHECK(std::abs(sy(0, 1) - kI) == 0.0);
  CHECK((qubit_op(QubitOp::projector_0) + qubit_op(QubitOp::projector_1) -
         Eigen::Matrix2cd::Identity()).norm() == 0.0);
}

TEST_CASE("tensor products use qubit-slow ordering") {
  const OscillatorSpace s(6);
  const CMatrix id6 = CMatrix::Identity(6, 6);
  CHECK((tensor(Eigen::Matrix2cd::Identity(), id6) - CMatrix::Identity(12, 12)).norm() == 0.0);

  const CMatrix p0n = tensor(qubit_op(QubitOp::projector_0), number_op<cplx>(s));
  for (int n = 0; n < 6; ++n) {
    CVector v = CVector::Zero(12);
    v(n) = 1.0;  // |0> (x) |n>
    CHECK((p0n * v - double(n) * v).norm() < 1e-15);
    CVector w = CVector::Zero(12);
    w(6 + n) = 1.0;  // |1> (x) |n>
    CHECK((p0n * w).norm() == 0.0);
  }

  const OscillatorSpace big(32);
  const JointState psi = product_state(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
                                       coherent_state(1.5, big));
  const CMatrix szI = tensor(qubit_op(QubitOp::sigma_z), CMatrix::Identity(32, 32));
  CHECK(std::abs(expectation(szI, psi.amplitudes())) < 1e-15);

  CHECK_THROWS_AS(tensor(CMatrix::Identity(3, 3), id6), DimensionMismatch);
  CHECK_THROWS_AS(tensor(Eigen::Matrix2cd::Identity(), CMatrix::Identity(3, 4)), DimensionMismatch);
}

TEST_CASE("hermitian operator certificate and eigendecomposition") {
  CHECK_THROWS_AS(HermitianOperator(annihilation_op<cplx>(OscillatorSpace(4))), NotHermitian);
  CHECK_THROWS_AS(HermitianOperator(CMatrix::Zero(2, 3)), InvalidArgument);

  SUBCASE("diagonal matrix sorted") {
    CMatrix d = CMatrix::Zero(4, 4);
    d.diagonal() << 3.0, -1.0, 2.0, 0.5;
    const Spectrum sp = hermitian_eig(HermitianOperator(d));
    CHECK(sp.values(0) == doctest::Approx(-1.0));
    CHECK(sp.values(1) == doctest::Approx(0.5));
    CHECK(sp.values(2) == doctest::Approx(2.0));
    CHECK(sp.values(3) == doctest::Approx(3.0));
  }
  SUBCASE("number operator") {
    const Spectrum sp = hermitian_eig(HermitianOperator(number_op<cplx>(OscillatorSpace(8))));
    for (int n = 0; n < 8; ++n) CHECK(std::abs(sp.values(n) - n) < 1e-14);
  }
  SUBCASE("residuals and orthonormality on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
      const HermitianOperator h(random_hermitian(40, rng));
      const Spectrum& sp = h.spectrum();
      const double hn = h.matrix().norm();
      for (int i = 0; i < 40; ++i) {
        const double res = (h.matrix() * sp.vectors.col(i) - sp.values(i) * sp.vectors.col(i)).norm();
        CHECK(res <= 1e-10 * hn);
      }
      CHECK((sp.vectors.adjoint() * sp.vectors - CMatrix::Identity(40, 40)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("quadratic oscillator gap equals the symplectic frequency") {
    // omega_t n + lambda (a^2 + a^dagger^2): levels E_n = Omega (n + 1/2) - omega_t / 2
    // with Omega = sqrt(omega_t^2 - 4 lambda^2). The truncation bends the
    // upper part of the ladder well before the top 10%, so only the lower
    // 96 levels are compared.
    const OscillatorSpace s(128);
    const CMatrix a = annihilation_op<cplx>(s);
    const double wt = 1.1, lam = 0.05;
    const CMatrix h = wt * number_op<cplx>(s) + lam * (a * a + a.adjoint() * a.adjoint());
    const Spectrum sp = hermitian_eig(HermitianOperator(h));
    const double Omega = std::sqrt(wt * wt - 4.0 * lam * lam);
    double worst = 0.0;
    for (int n = 1; n < 96; ++n) {
      worst = std::max(worst, std::abs(sp.values(n) - sp.values(n - 1) - Omega) / Omega);
    }
    CHECK(worst < 1e-9);
    CHECK(std::abs(sp.values(0) - (0.5 * Omega - 0.5 * wt)) < 1e-10);
  }
}

TEST_CASE("spectral cache is safe under concurrent first use") {
  std::mt19937 rng(11);
  const HermitianOperator h(random_hermitian(60, rng));
  std::vector<const Spectrum*> seen(8, nullptr);
  std::vector<std::thread> pool;
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { seen[i] = &h.spectrum(); });
  for (auto& t : pool) t.join();
  for (auto* p : seen) CHECK(p == seen.front());
  const HermitianOperator copy = h;
  CHECK(&copy.spectrum() == seen.front());
}

TEST_CASE("evolution") {
  const OscillatorSpace s(64);
  const double w = 1.3;
  const HermitianOperator h(w * number_op<cplx>(s));
  const OscState c = coherent_state(cplx(1.2, 0.4), s);

  SUBCASE("t = 0 is the identity") {
    CHECK((evolve(h, c, 0.0).amplitudes() - c.amplitudes()).norm() < 1e-14);
  }
  SUBCASE("harmonic evolution rotates the coherent amplitude") {
    const double t = 0.83;
    const OscState out = evolve(h, c, t);
    const OscState expected = coherent_state(cplx(1.2, 0.4) * std::exp(-kI * w * t), s);
    CHECK(std::norm(overlap(expected, out)) >= 1.0 - 1e-10);
  }
  SUBCASE("norm, energy and composition") {
    std::mt19937 rng(3);
    CMatrix m = random_hermitian(64, rng);
    // keep the top levels decoupled so the leakage guard is not the subject here
    m.bottomRows(8).setZero();
    m.rightCols(8).setZero();
    const HermitianOperator hr(m);
    const OscState s0 = coherent_state(1.0, s);
    const OscState s1 = evolve(hr, s0, 0.4);
    CHECK(std::abs(s1.amplitudes().norm() - 1.0) < 1e-12);
    const double e0 = expectation(m, s0.amplitudes()).real();
    const double e1 = expectation(m, s1.amplitudes()).real();
    CHECK(std::abs(e1 - e0) <= 1e-10 * std::max(1.0, std::abs(e0)));
    const CVector two_step = evolve(hr, evolve(hr, s0.amplitudes(), 0.3), 0.5);
    const CVector one_step = evolve(hr, s0.amplitudes(), 0.8);
    CHECK((two_step - one_step).norm() < 1e-10);
  }
  SUBCASE("leakage guard raises a truncation error with a larger dim") {
    const OscillatorSpace small(12);
    const CMatrix a = annihilation_op<cplx>(small);
    const HermitianOperator drive(a + a.adjoint());  // displaces the state up the ladder
    const OscState vac = fock_state(0, small);
    try {
      evolve(drive, vac, 3.0);
      FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
      CHECK(e.suggested_dim() > 12);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(evolve(h, coherent_state(0.5, OscillatorSpace(10)), 1.0), DimensionMismatch);
  }
}

TEST_CASE("overlaps") {
  const OscillatorSpace s(64);
  const OscState c = coherent_state(1.0, s);
  CHECK(std::abs(overlap(c, c) - 1.0) < 1e-14);
  CHECK(std::abs(overlap(fock_state(0, s), c) - std::exp(-0.5)) < 1e-10);
  CHECK(std::abs(overlap(fock_state(3, s), fock_state(5, s))) == 0.0);
  const OscState d = coherent_state(cplx(0.2, -1.1), s);
  CHECK(std::abs(overlap(c, d)) <= 1.0 + 1e-12);
  // <beta|alpha> = exp(-|a|^2/2 - |b|^2/2 + conj(b) a)
  const cplx a(1.0, 0.0), b(0.2, -1.1);
  const cplx closed = std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(b) * a);
  CHECK(std::abs(overlap(d, c) - closed) < 1e-10);
  CHECK_THROWS_AS(overlap(c, coherent_state(1.0, OscillatorSpace(40))), DimensionMismatch);
}

TEST_CASE("partial trace over the oscillator") {
  const OscillatorSpace s(40);
  const cplx c0(0.6, 0.0), c1(0.0, 0.8);
  SUBCASE("product state") {
    const auto rho = partial_trace_qubit(product_state(c0, c1, coherent_state(1.3, s)));
    CHECK(std::abs(rho(0, 1) - c0 * std::conj(c1)) < 1e-12);
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
    CHECK(std::abs(rho(0, 0) - 0.36) < 1e-12);
  }
  SUBCASE("branch state off-diagonal") {
    const OscState s0 = coherent_state(1.0, s), s1 = coherent_state(cplx(0.3, 0.9), s);
    CVector v(80);
    v << c0 * s0.amplitudes(), c1 * s1.amplitudes();
    const auto rho = partial_trace_qubit(JointState(v, s));
    CHECK(std::abs(rho(0, 1) - c0 * std::conj(c1) * overlap(s1, s0)) < 1e-12);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  }
  SUBCASE("orthogonal branches") {
    CVector v(80);
    v << c0 * fock_state(0, s).amplitudes(), c1 * fock_state(1, s).amplitudes();
    CHECK(std::abs(partial_trace_qubit(JointState(v, s))(0, 1)) == 0.0);
  }
}

TEST_CASE("joint state validation and leakage accounting") {
  const OscillatorSpace s(10);
  CHECK_THROWS_AS(JointState(CVector::Ones(19), s), DimensionMismatch);
  CHECK_THROWS_AS(JointState(CVector::Zero(20), s), InvalidArgument);
  const JointState j(CVector::Ones(20), s);
  CHECK(std::abs(j.amplitudes().norm() - 1.0) < 1e-15);
  CHECK(top_level_population(j.amplitudes(), 10) == doctest::Approx(0.5));
}

}  // TEST_SUITE
