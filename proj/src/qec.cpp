#include "softpulse/qec.hpp"

#include <cmath>

#include "softpulse/gate_design.hpp"
#include "softpulse/random_states.hpp"

namespace softpulse {

namespace {
const Complex kI{0.0, 1.0};

void validate(const CorrelatedChannel& ch) {
  double sum = 0.0;
  for (double pi : ch.p) {
    if (pi < 0.0) throw BadChannel("channel: probabilities must be >= 0");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw BadChannel("channel: probabilities must sum to 1");
}

// e^{-i angle I_axis^(k)} on three qubits.
ComplexMatrix rot(int k, Axis axis, double angle) {
  return expm_unitary(spin_op(axis, k, 3), angle);
}

ComplexMatrix ideal_zz_gate(int a, int b) {
  return expm_unitary(spin_op(Axis::Z, a, 3) * spin_op(Axis::Z, b, 3), M_PI);
}

ComplexMatrix build_encode(const ComplexMatrix& u12, const ComplexMatrix& u23) {
  return rot(2, Axis::Y, M_PI / 2.0) * u23 * rot(2, Axis::X, -M_PI / 2.0) *
         rot(1, Axis::Y, -M_PI / 2.0) * u12;
}

ComplexMatrix build_decode(const ComplexMatrix& u12, const ComplexMatrix& u23) {
  return u12 * rot(1, Axis::Y, M_PI / 2.0) * rot(2, Axis::X, -M_PI / 2.0) *
         u23 * rot(2, Axis::Y, -M_PI / 2.0);
}

double recovery_fidelity(const ComplexMatrix& enc, const ComplexMatrix& dec,
                         const ComplexMatrix& rho_u,
                         const ComplexMatrix& rho_v, const StateVector& psi,
                         const CorrelatedChannel& ch) {
  const ComplexMatrix rho_psi = psi * psi.adjoint();
  const ComplexMatrix rho = kron(kron(rho_u, rho_psi), rho_v);
  const ComplexMatrix noisy = apply_channel(enc * rho * enc.adjoint(), ch);
  const ComplexMatrix out =
      partial_trace_keep_middle(dec * noisy * dec.adjoint());
  return (psi.adjoint() * out * psi)(0, 0).real();
}
}  // namespace

std::array<ComplexMatrix, 4> kraus_set() {
  auto cube = [](const ComplexMatrix& s) { return kron(kron(s, s), s); };
  return {ComplexMatrix::Identity(8, 8), cube(pauli_x()), cube(pauli_y()),
          cube(pauli_z())};
}

ComplexMatrix apply_channel(const ComplexMatrix& rho,
                            const CorrelatedChannel& ch) {
  validate(ch);
  if (rho.rows() != 8 || rho.cols() != 8)
    throw BadDimension("apply_channel: expected an 8x8 density matrix");
  const auto kraus = kraus_set();
  ComplexMatrix out = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 4; ++i)
    out += ch.p[i] * kraus[i] * rho * kraus[i].adjoint();
  return out;
}

ComplexMatrix soft_gate(int pair, const SpinChainParams& p) {
  if (pair == 23) {
    const SoftPulseSolution sol =
        soft_amplitude(M_PI, p.j12, p.j23, min_valid_n(M_PI, p.j12, p.j23));
    const ComplexMatrix u =
        expm_unitary(full_hamiltonian(p, sol.omega_plus), sol.tau);
    return to_individual_frame(u, p, sol.tau);
  }
  if (pair == 12) {
    // Role-swapped: rf carrier on qubit 3, qubit 2 cancellation via J23.
    const SoftPulseSolution sol =
        soft_amplitude(M_PI, p.j23, p.j12, min_valid_n(M_PI, p.j23, p.j12));
    const double d1 = -p.delta13;             // qubit 1 seen from carrier 3
    const double d2 = p.delta12 - p.delta13;  // qubit 2 seen from carrier 3
    ComplexMatrix rf = ComplexMatrix::Zero(8, 8);
    for (int k = 1; k <= 3; ++k) rf += spin_op(Axis::X, k, 3);
    const ComplexMatrix h =
        sol.omega_plus * rf + d1 * spin_op(Axis::Z, 1, 3) +
        d2 * spin_op(Axis::Z, 2, 3) +
        p.j12 * spin_op(Axis::Z, 1, 3) * spin_op(Axis::Z, 2, 3) +
        p.j23 * spin_op(Axis::Z, 2, 3) * spin_op(Axis::Z, 3, 3);
    const ComplexMatrix frame =
        d1 * spin_op(Axis::Z, 1, 3) + d2 * spin_op(Axis::Z, 2, 3);
    return expm_unitary(frame, -sol.tau) * expm_unitary(h, sol.tau);
  }
  throw BadIndex("soft_gate: pair must be 12 or 23");
}

ComplexMatrix encode_operator(bool ideal, const SpinChainParams& p) {
  if (ideal) return build_encode(ideal_zz_gate(1, 2), ideal_zz_gate(2, 3));
  return build_encode(soft_gate(12, p), soft_gate(23, p));
}

ComplexMatrix decode_operator(bool ideal, const SpinChainParams& p) {
  if (ideal) return build_decode(ideal_zz_gate(1, 2), ideal_zz_gate(2, 3));
  return build_decode(soft_gate(12, p), soft_gate(23, p));
}

std::array<IdentityCheck, 4> operator_identity_check(double tol) {
  const ComplexMatrix enc =
      build_encode(ideal_zz_gate(1, 2), ideal_zz_gate(2, 3));
  const ComplexMatrix dec =
      build_decode(ideal_zz_gate(1, 2), ideal_zz_gate(2, 3));
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const std::array<ComplexMatrix, 4> rhs = {
      -1.0 * kron(kron(pauli_z(), i2), pauli_z()),
      kI * kron(kron(i2, i2), pauli_x()),
      -1.0 * kron(kron(pauli_y(), i2), pauli_x()),
      -kI * kron(kron(pauli_x(), i2), pauli_z())};
  const auto kraus = kraus_set();
  std::array<IdentityCheck, 4> report;
  for (int i = 0; i < 4; ++i) {
    const ComplexMatrix m = dec * kraus[i] * enc;
    // Fit the single global phase via the trace overlap.
    const Complex lambda = (rhs[i].adjoint() * m).trace() / 8.0;
    report[i].phase = std::arg(lambda);
    report[i].residual = max_abs(m - std::exp(kI * report[i].phase) * rhs[i]);
    report[i].ok = report[i].residual < tol;
  }
  return report;
}

double recovery_check(const StateVector& u, const StateVector& v,
                      const StateVector& psi, const CorrelatedChannel& ch,
                      bool ideal, const SpinChainParams& p) {
  return recovery_check_density(u * u.adjoint(), v * v.adjoint(), psi, ch,
                                ideal, p);
}

double recovery_check_density(const ComplexMatrix& rho_u,
                              const ComplexMatrix& rho_v,
                              const StateVector& psi,
                              const CorrelatedChannel& ch, bool ideal,
                              const SpinChainParams& p) {
  validate(ch);
  return recovery_fidelity(encode_operator(ideal, p), decode_operator(ideal, p),
                           rho_u, rho_v, psi, ch);
}

RecoveryStats soft_pulse_recovery_fidelity(const SpinChainParams& p,
                                           const CorrelatedChannel& ch,
                                           int trials) {
  if (trials < 1)
    throw ValidationError("soft_pulse_recovery_fidelity: trials must be >= 1");
  validate(ch);
  const ComplexMatrix enc = encode_operator(false, p);
  const ComplexMatrix dec = decode_operator(false, p);
  StateSampler sampler(0x5057u);
  RecoveryStats stats{1.0, 0.0};
  for (int t = 0; t < trials; ++t) {
    const StateVector u = sampler.qubit_state();
    const StateVector psi = sampler.qubit_state();
    const StateVector v = sampler.qubit_state();
    const double f = recovery_fidelity(enc, dec, u * u.adjoint(),
                                       v * v.adjoint(), psi, ch);
    stats.min = std::min(stats.min, f);
    stats.mean += f;
  }
  stats.mean /= trials;
  return stats;
}

}  // namespace softpulse
