#include "softpulse/spin_system.hpp"

#include <cmath>

namespace softpulse {

namespace {
const Complex kI{0.0, 1.0};

ComplexMatrix half_pauli(Axis axis) {
  switch (axis) {
    case Axis::X:
      return 0.5 * pauli_x();
    case Axis::Y:
      return 0.5 * pauli_y();
    case Axis::Z:
      return 0.5 * pauli_z();
  }
  throw BadIndex("spin_op: unknown axis");
}

// Iz_a Iz_b on three qubits (diagonal).
ComplexMatrix zz(int a, int b) {
  return spin_op(Axis::Z, a, 3) * spin_op(Axis::Z, b, 3);
}
}  // namespace

ComplexMatrix spin_op(Axis axis, int k, int n) {
  if (k < 1 || k > n) throw BadIndex("spin_op: qubit index out of range");
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int q = 1; q <= n; ++q)
    out = kron(out, q == k ? half_pauli(axis) : ComplexMatrix::Identity(2, 2));
  return out;
}

ComplexMatrix reduced_hamiltonian(const SpinChainParams& p, double omega1,
                                  double phase) {
  return omega1 * (std::cos(phase) * spin_op(Axis::X, 1, 3) +
                   std::sin(phase) * spin_op(Axis::Y, 1, 3)) +
         p.j12 * zz(1, 2) + p.j23 * zz(2, 3);
}

ComplexMatrix full_hamiltonian(const SpinChainParams& p, double omega1,
                               double phase) {
  ComplexMatrix rf = ComplexMatrix::Zero(8, 8);
  for (int k = 1; k <= 3; ++k)
    rf += std::cos(phase) * spin_op(Axis::X, k, 3) +
          std::sin(phase) * spin_op(Axis::Y, k, 3);
  return omega1 * rf + p.delta12 * spin_op(Axis::Z, 2, 3) +
         p.delta13 * spin_op(Axis::Z, 3, 3) + p.j12 * zz(1, 2) +
         p.j23 * zz(2, 3);
}

ComplexMatrix target_entangler(double alpha) {
  if (alpha == 0.0) throw ZeroAlpha("target_entangler: alpha must be nonzero");
  return expm_unitary(zz(2, 3), alpha);
}

ComplexMatrix target_common_frame(const SpinChainParams& p) {
  const double t = M_PI / p.j23;
  return target_entangler(M_PI) *
         expm_unitary(spin_op(Axis::Z, 2, 3), p.delta12 * t) *
         expm_unitary(spin_op(Axis::Z, 3, 3), p.delta13 * t);
}

ComplexMatrix to_individual_frame(const ComplexMatrix& u,
                                  const SpinChainParams& p, double t) {
  const ComplexMatrix frame = p.delta12 * spin_op(Axis::Z, 2, 3) +
                              p.delta13 * spin_op(Axis::Z, 3, 3);
  return expm_unitary(frame, -t) * u;
}

}  // namespace softpulse
