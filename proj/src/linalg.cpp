#include "softpulse/linalg.hpp"

#include <cmath>

namespace softpulse {

namespace {
constexpr double kHermTol = 1e-10;
const Complex kI{0.0, 1.0};
}  // namespace

double max_abs(const ComplexMatrix& a) { return a.cwiseAbs().maxCoeff(); }

double unitarity_residual(const ComplexMatrix& u) {
  return max_abs(u.adjoint() * u -
                 ComplexMatrix::Identity(u.rows(), u.cols()));
}

ComplexMatrix pauli_x() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

ComplexMatrix pauli_y() {
  ComplexMatrix s(2, 2);
  s << 0, -kI, kI, 0;
  return s;
}

ComplexMatrix pauli_z() {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

EigenSystem hermitian_eig(const ComplexMatrix& h) {
  if (h.rows() != h.cols())
    throw BadDimension("hermitian_eig: matrix must be square");
  if (max_abs(h - h.adjoint()) >= kHermTol)
    throw NotHermitian("hermitian_eig: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_unitary(const ComplexMatrix& h, double t) {
  const EigenSystem es = hermitian_eig(h);
  const Eigen::Index n = h.rows();
  StateVector phases(n);
  for (Eigen::Index j = 0; j < n; ++j)
    phases(j) = std::exp(-kI * es.eigenvalues(j) * t);
  return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

ComplexMatrix partial_trace_keep_middle(const ComplexMatrix& rho) {
  if (rho.rows() != 8 || rho.cols() != 8)
    throw BadDimension("partial_trace_keep_middle: expected an 8x8 matrix");
  ComplexMatrix sigma = ComplexMatrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
          sigma(a, b) += rho(i * 4 + a * 2 + k, i * 4 + b * 2 + k);
  return sigma;
}

PhaseIdentityResult identity_up_to_phase(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols())
    throw BadDimension("identity_up_to_phase: matrix must be square");
  PhaseIdentityResult res;
  if (std::abs(u(0, 0)) < tol) return res;
  res.phi = std::arg(u(0, 0));
  const ComplexMatrix target =
      std::exp(kI * res.phi) * ComplexMatrix::Identity(u.rows(), u.cols());
  res.is_phase_identity = max_abs(u - target) < tol;
  if (res.is_phase_identity && u.rows() == 8) {
    const double step = M_PI / 4.0;
    res.phi_snapped = step * std::round(res.phi / step);
  }
  return res;
}

}  // namespace softpulse
