#include <doctest.h>

#include "oracles.hpp"
#include "softpulse/spin_system.hpp"

using namespace softpulse;

namespace {
const ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);

SpinChainParams alanine() {
  constexpr double two_pi = 2.0 * M_PI;
  return {two_pi * 34.8, two_pi * 53.8, two_pi * -4320.0, two_pi * -20100.0,
          "alanine"};
}

double half(int bit) { return bit == 0 ? 0.5 : -0.5; }
}  // namespace

TEST_CASE("spin_op placement") {
  const ComplexMatrix sx1 = spin_op(Axis::X, 1, 3);
  CHECK(sx1(0, 4) == Complex(0.5, 0.0));
  CHECK(max_abs(sx1 - kron(kron(0.5 * pauli_x(), I2), I2)) == 0.0);

  const ComplexMatrix sz2 = spin_op(Axis::Z, 2, 3);
  for (int b = 0; b < 8; ++b)
    CHECK(sz2(b, b) == Complex(half((b >> 1) & 1), 0.0));

  CHECK(max_abs(spin_op(Axis::Y, 3, 3) -
                kron(kron(I2, I2), 0.5 * pauli_y())) == 0.0);

  CHECK_THROWS_AS(spin_op(Axis::X, 4, 3), BadIndex);
  CHECK_THROWS_AS(spin_op(Axis::X, 0, 3), BadIndex);
}

TEST_CASE("reduced_hamiltonian diagonal at omega1 = 0") {
  const SpinChainParams p = alanine();
  const ComplexMatrix h = reduced_hamiltonian(p, 0.0);
  for (int b = 0; b < 8; ++b) {
    const double m1 = half(b >> 2), m2 = half((b >> 1) & 1), m3 = half(b & 1);
    CHECK(std::abs(h(b, b) - Complex(p.j12 * m1 * m2 + p.j23 * m2 * m3, 0)) <
          1e-12);
  }
}

TEST_CASE("reduced_hamiltonian hermitian, traceless, term oracle") {
  const SpinChainParams p = alanine();
  const double w = 2.0 * M_PI * 714.0;
  const ComplexMatrix h = reduced_hamiltonian(p, w);
  CHECK(std::abs(h.trace()) < 1e-9);
  CHECK(max_abs(h - h.adjoint()) < 1e-12);

  StateSampler s(21);
  const SpinChainParams q{s.uniform() * 500, s.uniform() * 500,
                          s.normal() * 1e4, s.normal() * 1e4, "rand"};
  const double w2 = s.normal() * 1e3;
  const ComplexMatrix expected =
      w2 * spin_op(Axis::X, 1, 3) +
      q.j12 * spin_op(Axis::Z, 1, 3) * spin_op(Axis::Z, 2, 3) +
      q.j23 * spin_op(Axis::Z, 2, 3) * spin_op(Axis::Z, 3, 3);
  CHECK(max_abs(reduced_hamiltonian(q, w2) - expected) < 1e-12);
}

TEST_CASE("full_hamiltonian structure") {
  const SpinChainParams p = alanine();
  const ComplexMatrix base =
      reduced_hamiltonian(p, 0.0) + p.delta12 * spin_op(Axis::Z, 2, 3) +
      p.delta13 * spin_op(Axis::Z, 3, 3);
  // entries are of magnitude ~1e5 rad/s; compare at relative precision
  CHECK(max_abs(full_hamiltonian(p, 0.0) - base) < 1e-9);

  const double w = 2.0 * M_PI * 106.0;
  const ComplexMatrix h = full_hamiltonian(p, w);
  CHECK(std::abs(h.trace()) < 1e-8);
  CHECK(max_abs(h - h.adjoint()) < 1e-12);
}

TEST_CASE("full_hamiltonian phase knob is a z-rotation conjugation") {
  const SpinChainParams p = alanine();
  const double w = 2.0 * M_PI * 300.0;
  ComplexMatrix zsum = ComplexMatrix::Zero(8, 8);
  for (int k = 1; k <= 3; ++k) zsum += spin_op(Axis::Z, k, 3);
  const ComplexMatrix r = expm_unitary(zsum, M_PI / 2.0);
  CHECK(max_abs(full_hamiltonian(p, w, M_PI / 2.0) -
                r * full_hamiltonian(p, w, 0.0) * r.adjoint()) < 1e-9);
}

TEST_CASE("target_entangler") {
  const ComplexMatrix u = target_entangler(M_PI);
  for (int b = 0; b < 8; ++b) {
    const double m2m3 = half((b >> 1) & 1) * half(b & 1);
    const Complex expected = std::exp(Complex(0, -M_PI * m2m3));
    CHECK(std::abs(u(b, b) - expected) < 1e-12);
  }

  CHECK(max_abs(target_entangler(4.0 * M_PI) +
                ComplexMatrix::Identity(8, 8)) < 1e-12);
  CHECK(max_abs(target_entangler(8.0 * M_PI) -
                ComplexMatrix::Identity(8, 8)) < 1e-12);

  // kernel oracle: exponentiate the J23 term of the chain Hamiltonian
  const SpinChainParams p = alanine();
  const double alpha = 1.234;
  const ComplexMatrix via_h = expm_unitary(
      p.j23 * spin_op(Axis::Z, 2, 3) * spin_op(Axis::Z, 3, 3), alpha / p.j23);
  CHECK(max_abs(target_entangler(alpha) - via_h) < 1e-12);

  CHECK_THROWS_AS(target_entangler(0.0), ZeroAlpha);
}

TEST_CASE("target_entangler semigroup in alpha") {
  CHECK(max_abs(target_entangler(0.7) * target_entangler(1.9) -
                target_entangler(2.6)) < 1e-10);
}

TEST_CASE("target_common_frame") {
  SpinChainParams nodet = alanine();
  nodet.delta12 = nodet.delta13 = 0.0;
  CHECK(max_abs(target_common_frame(nodet) - target_entangler(M_PI)) < 1e-12);

  const SpinChainParams p = alanine();
  const ComplexMatrix u = target_common_frame(p);
  CHECK(unitarity_residual(u) < 1e-10);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i != j) CHECK(std::abs(u(i, j)) < 1e-12);

  // commuting-generator oracle: one exponential of the summed generator
  const double t = M_PI / p.j23;
  const ComplexMatrix gen =
      p.j23 * spin_op(Axis::Z, 2, 3) * spin_op(Axis::Z, 3, 3) +
      p.delta12 * spin_op(Axis::Z, 2, 3) + p.delta13 * spin_op(Axis::Z, 3, 3);
  CHECK(max_abs(u - expm_unitary(gen, t)) < 1e-9);
}

TEST_CASE("to_individual_frame") {
  const SpinChainParams p = alanine();
  StateSampler s(22);
  const ComplexMatrix u = test::random_unitary(s, 8);
  CHECK(max_abs(to_individual_frame(u, p, 0.0) - u) == 0.0);

  CHECK(max_abs(to_individual_frame(target_common_frame(p), p, M_PI / p.j23) -
                target_entangler(M_PI)) < 1e-10);

  // diagonal u commutes with the frame factor
  ComplexMatrix d = ComplexMatrix::Zero(8, 8);
  for (int b = 0; b < 8; ++b) d(b, b) = std::exp(Complex(0, s.normal()));
  const double t = 1e-3;
  const ComplexMatrix frame = expm_unitary(
      p.delta12 * spin_op(Axis::Z, 2, 3) + p.delta13 * spin_op(Axis::Z, 3, 3),
      -t);
  CHECK(max_abs(to_individual_frame(d, p, t) - d * frame) < 1e-10);
}

TEST_CASE("free evolution factorizes into commuting coupling terms") {
  const SpinChainParams p = alanine();
  StateSampler s(23);
  const ComplexMatrix j12_term =
      p.j12 * spin_op(Axis::Z, 1, 3) * spin_op(Axis::Z, 2, 3);
  for (int rep = 0; rep < 20; ++rep) {
    const double t = 1e-4 + 0.02 * s.uniform();
    CHECK(max_abs(expm_unitary(reduced_hamiltonian(p, 0.0), t) -
                  expm_unitary(j12_term, t) * target_entangler(p.j23 * t)) <
          1e-10);
  }
}
