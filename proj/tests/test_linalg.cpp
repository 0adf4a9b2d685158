#include <doctest.h>

#include "oracles.hpp"
#include "softpulse/linalg.hpp"

using namespace softpulse;

namespace {
const ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
const ComplexMatrix I4 = ComplexMatrix::Identity(4, 4);
}  // namespace

TEST_CASE("kron identity and diagonal cases") {
  CHECK(max_abs(kron(I2, I2) - I4) == 0.0);

  const ComplexMatrix zz = kron(0.5 * pauli_z(), I2);
  Eigen::Vector4cd expected;
  expected << 0.5, 0.5, -0.5, -0.5;
  CHECK(max_abs(zz - ComplexMatrix(expected.asDiagonal())) < 1e-15);
}

TEST_CASE("kron matches the index oracle on random inputs") {
  StateSampler s(11);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = test::random_matrix(s, 2);
    const ComplexMatrix b = test::random_matrix(s, 2);
    CHECK(max_abs(kron(a, b) - test::kron_oracle(a, b)) < 1e-14);
  }
  CHECK(max_abs(kron(pauli_x(), pauli_y()) -
                test::kron_oracle(pauli_x(), pauli_y())) == 0.0);
}

TEST_CASE("dagger") {
  CHECK(max_abs(dagger(I2) - I2) == 0.0);
  CHECK(max_abs(dagger(pauli_y()) - pauli_y()) == 0.0);
  StateSampler s(12);
  const ComplexMatrix a = test::random_matrix(s, 4);
  CHECK(max_abs(dagger(dagger(a)) - a) == 0.0);
}

TEST_CASE("hermitian_eig on half-Paulis") {
  const EigenSystem ez = hermitian_eig(0.5 * pauli_z());
  CHECK(ez.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(ez.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-12));

  const EigenSystem ex = hermitian_eig(0.5 * pauli_x());
  CHECK(ex.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(ex.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-12));
  // eigenvectors (1, -1)/sqrt(2) and (1, 1)/sqrt(2) up to phase
  for (int col = 0; col < 2; ++col) {
    const double ratio =
        std::abs(ex.eigenvectors(1, col) / ex.eigenvectors(0, col) -
                 (col == 0 ? -1.0 : 1.0));
    CHECK(ratio < 1e-10);
  }
}

TEST_CASE("hermitian_eig reconstruction and rejection") {
  StateSampler s(13);
  const ComplexMatrix h = test::random_hermitian(s, 8);
  const EigenSystem es = hermitian_eig(h);
  const ComplexMatrix recon = es.eigenvectors *
                              es.eigenvalues.cast<Complex>().asDiagonal() *
                              es.eigenvectors.adjoint();
  CHECK(max_abs(recon - h) < 1e-10);
  CHECK(unitarity_residual(es.eigenvectors) < 1e-10);

  ComplexMatrix bad = test::random_hermitian(s, 4);
  bad(0, 1) += Complex(1.0, 1.0);
  CHECK_THROWS_AS(hermitian_eig(bad), NotHermitian);
}

TEST_CASE("expm_unitary basics") {
  StateSampler s(14);
  const ComplexMatrix h = test::random_hermitian(s, 8);
  CHECK(max_abs(expm_unitary(h, 0.0) - ComplexMatrix::Identity(8, 8)) < 1e-12);

  // single-qubit Iz over 2 pi picks up e^{-+ i pi} = -1 on both levels
  CHECK(max_abs(expm_unitary(0.5 * pauli_z(), 2.0 * M_PI) + I2) < 1e-12);

  CHECK(max_abs(expm_unitary(h, 0.01) - test::taylor_expm(h, 0.01)) < 1e-9);
  CHECK(unitarity_residual(expm_unitary(h, 0.37)) < 1e-10);
}

TEST_CASE("expm_unitary semigroup property") {
  StateSampler s(15);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix h = 1e3 * test::random_hermitian(s, 8);
    const double t1 = 0.02 * s.uniform();
    const double t2 = 0.02 * s.uniform();
    CHECK(max_abs(expm_unitary(h, t1 + t2) -
                  expm_unitary(h, t1) * expm_unitary(h, t2)) < 1e-9);
  }
}

TEST_CASE("partial trace keep middle") {
  StateSampler s(16);
  const ComplexMatrix r1 = test::random_density(s, 2);
  const ComplexMatrix r2 = test::random_density(s, 2);
  const ComplexMatrix r3 = test::random_density(s, 2);
  CHECK(max_abs(partial_trace_keep_middle(kron(kron(r1, r2), r3)) - r2) <
        1e-12);

  CHECK(max_abs(partial_trace_keep_middle(ComplexMatrix::Identity(8, 8) / 8.0) -
                I2 / 2.0) < 1e-15);

  const ComplexMatrix rho = test::random_density(s, 8);
  CHECK(max_abs(partial_trace_keep_middle(rho) -
                test::partial_trace_oracle(rho)) < 1e-14);

  CHECK_THROWS_AS(partial_trace_keep_middle(I4), BadDimension);
}

TEST_CASE("partial trace is linear and trace preserving") {
  StateSampler s(17);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = test::random_matrix(s, 8);
    const ComplexMatrix b = test::random_matrix(s, 8);
    const Complex c(s.normal(), s.normal());
    CHECK(max_abs(partial_trace_keep_middle(a + c * b) -
                  (partial_trace_keep_middle(a) +
                   c * partial_trace_keep_middle(b))) < 1e-12);
    CHECK(std::abs(partial_trace_keep_middle(a).trace() - a.trace()) < 1e-12);
  }
}

TEST_CASE("identity_up_to_phase") {
  const auto minus = identity_up_to_phase(-ComplexMatrix::Identity(8, 8), 1e-10);
  CHECK(minus.is_phase_identity);
  CHECK(std::abs(std::abs(minus.phi) - M_PI) < 1e-12);
  REQUIRE(minus.phi_snapped.has_value());
  CHECK(std::abs(std::abs(*minus.phi_snapped) - M_PI) < 1e-12);

  CHECK_FALSE(identity_up_to_phase(pauli_x(), 1e-10).is_phase_identity);
}
