#pragma once

#include <array>

#include "softpulse/spin_system.hpp"

namespace softpulse {

// Fully correlated Pauli channel: probabilities for the Kraus set
// {I^(x3), sx^(x3), sy^(x3), sz^(x3)}.
struct CorrelatedChannel {
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};
};

// The four threefold Pauli tensor powers E0..E3.
std::array<ComplexMatrix, 4> kraus_set();

// rho -> sum_i p_i E_i rho E_i^dag. Throws BadChannel for an invalid
// probability vector.
ComplexMatrix apply_channel(const ComplexMatrix& rho,
                            const CorrelatedChannel& ch);

// NMR-form encoding operator. ideal = true uses exact exp(-i pi Izi Izj)
// two-qubit factors; ideal = false substitutes full-model soft-pulse
// simulations converted to the individual frame. One-qubit rotations are
// instantaneous in both modes.
ComplexMatrix encode_operator(bool ideal, const SpinChainParams& p);

// NMR-form decoding operator, mirror ordering of the encoder.
ComplexMatrix decode_operator(bool ideal, const SpinChainParams& p);

// Full-model soft-pulse realization of exp(-i pi Izi Izj) in the individual
// frame. pair is 12 or 23; for pair 12 the rf drives qubit 3.
ComplexMatrix soft_gate(int pair, const SpinChainParams& p);

struct IdentityCheck {
  bool ok = false;
  double residual = 0.0;
  double phase = 0.0;  // fitted global phase, rad
};

// Tests U_R E_i U_E (ideal operators) against the four stated
// single-tensor right-hand sides, up to one global phase each.
std::array<IdentityCheck, 4> operator_identity_check(double tol);

// State fidelity of the data qubit after encode / channel / decode /
// partial trace, for pure ancillae u, v and data state psi.
double recovery_check(const StateVector& u, const StateVector& v,
                      const StateVector& psi, const CorrelatedChannel& ch,
                      bool ideal, const SpinChainParams& p);

// Variant taking 2x2 ancilla density matrices (e.g. maximally mixed).
double recovery_check_density(const ComplexMatrix& rho_u,
                              const ComplexMatrix& rho_v,
                              const StateVector& psi,
                              const CorrelatedChannel& ch, bool ideal,
                              const SpinChainParams& p);

struct RecoveryStats {
  double min = 0.0;
  double mean = 0.0;
};

// Seeded end-to-end run of the soft-pulse encode/decode over random
// (u, v, psi) draws. Throws ValidationError unless trials >= 1.
RecoveryStats soft_pulse_recovery_fidelity(const SpinChainParams& p,
                                           const CorrelatedChannel& ch,
                                           int trials);

}  // namespace softpulse
