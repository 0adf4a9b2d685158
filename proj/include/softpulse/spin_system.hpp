#pragma once

#include <string>

#include "softpulse/linalg.hpp"

namespace softpulse {

enum class Axis { X, Y, Z };

// Couplings and detunings of a 3-spin linear chain, all in angular
// frequency (rad/s). J13 is assumed zero throughout.
struct SpinChainParams {
  double j12 = 0.0;
  double j23 = 0.0;
  double delta12 = 0.0;
  double delta13 = 0.0;
  std::string label;
};

// sigma_axis/2 acting on qubit k (1-based) of an n-qubit register.
// Qubit 1 is the most significant tensor factor.
ComplexMatrix spin_op(Axis axis, int k, int n);

// omega1 (cos(phase) Ix1 + sin(phase) Iy1) + J12 Iz1 Iz2 + J23 Iz2 Iz3.
// The rf term couples to qubit 1 only.
ComplexMatrix reduced_hamiltonian(const SpinChainParams& p, double omega1,
                                  double phase = 0.0);

// Common-frame Hamiltonian: the rf term couples to all three qubits and the
// spectator detunings appear as Iz terms.
ComplexMatrix full_hamiltonian(const SpinChainParams& p, double omega1,
                               double phase = 0.0);

// U23(alpha) = exp(-i alpha Iz2 Iz3). Throws ZeroAlpha for alpha == 0.
ComplexMatrix target_entangler(double alpha);

// Common-frame target for alpha = pi: the entangler times the detuning
// phases accumulated over the gate time pi/J23.
ComplexMatrix target_common_frame(const SpinChainParams& p);

// Removes the common-frame detuning phases accumulated over time t:
// exp(+i (delta12 Iz2 + delta13 Iz3) t) * u.
ComplexMatrix to_individual_frame(const ComplexMatrix& u,
                                  const SpinChainParams& p, double t);

}  // namespace softpulse
