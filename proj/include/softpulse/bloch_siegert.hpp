#pragma once

#include "softpulse/spin_system.hpp"

namespace softpulse {

// Second-order phase shift accumulated by a spectator of detuning delta
// during a rectangular pulse: omega1^2 tau / (2 delta).
double bs_phase_rect(double omega1, double delta, double tau);

// Shift for a pi pulse (tau = pi/|omega1|): |omega1| pi / (2 delta).
double bs_phase_pi_pulse(double omega1, double delta);

// Exact accumulated z-phase beyond bare detuning under delta Iz + omega1 Ix:
// (delta sqrt(1+eps^2) - delta) tau, eps = omega1/delta.
double exact_z_phase_excess(double omega1, double delta, double tau);

struct BsReport {
  double epsilon = 0.0;
  double approx_phase = 0.0;   // rad
  double exact_phase = 0.0;    // rad
  double relative_error = 0.0;
};

// Bundle for spectator qubit 2 or 3 of the chain.
BsReport bs_report(const SpinChainParams& p, double omega1, double tau,
                   int spectator);

}  // namespace softpulse
