#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "softpulse/errors.hpp"

namespace softpulse {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Entrywise max-norm |a|_max.
double max_abs(const ComplexMatrix& a);

// |u^dag u - I|_max.
double unitarity_residual(const ComplexMatrix& u);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Tensor product: (a kron b)[i*bd+k, j*bd+l] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

struct EigenSystem {
  RealVector eigenvalues;    // ascending
  ComplexMatrix eigenvectors;  // columns, unitary
};

// Eigendecomposition of a Hermitian matrix. Throws NotHermitian if
// |h - h^dag|_max >= 1e-10.
EigenSystem hermitian_eig(const ComplexMatrix& h);

// exp(-i h t) for Hermitian h, via eigendecomposition.
ComplexMatrix expm_unitary(const ComplexMatrix& h, double t);

// Partial trace over qubits 1 and 3 of an 8x8 density matrix; qubit 1 is the
// most significant tensor factor. Throws BadDimension unless rho is 8x8.
ComplexMatrix partial_trace_keep_middle(const ComplexMatrix& rho);

struct PhaseIdentityResult {
  bool is_phase_identity = false;
  double phi = 0.0;  // arg(u[0,0]) when identity-like
  // Nearest pi*k/4 grid point, reported only for dim 8 on success.
  std::optional<double> phi_snapped;
};

// Tests whether u = e^{i phi} I within tol (max-norm).
PhaseIdentityResult identity_up_to_phase(const ComplexMatrix& u, double tol);

}  // namespace softpulse
