#pragma once

#include <vector>

#include "softpulse/spin_system.hpp"

namespace softpulse {

struct SoftPulseSolution {
  int n = 0;
  double omega_plus = 0.0;   // rad/s
  double omega_minus = 0.0;  // rad/s
  double tau = 0.0;          // s
};

// Least n with 4 pi^2 n^2 j23^2 / alpha^2 - j12^2/4 > 0.
int min_valid_n(double alpha, double j12, double j23);

// Both signed amplitude roots of the cancellation condition for the given n.
// Throws NoValidN if the radicand is not positive.
SoftPulseSolution soft_amplitude(double alpha, double j12, double j23, int n);

struct CancellationResult {
  bool ok = false;
  double phi = 0.0;  // on the 2 pi k / 8 lattice when ok
};

// Exponentiates the residual generator omega1 Ix1 + J12 Iz1 Iz2 over
// tau = alpha/J23 and tests whether it is a global phase.
CancellationResult verify_cancellation(double omega1, double alpha,
                                       const SpinChainParams& p, double tol);

// |Tr(u^dag v)| / dim. Throws NotUnitary unless both arguments are unitary
// within 1e-8.
double propagator_fidelity(const ComplexMatrix& u, const ComplexMatrix& v);

// Full-model refocusing propagator at normalized parameters
// tau_tilde = 2 J23 tau / pi, omega_tilde = omega1 tau / pi.
// tau_tilde = 0 means pure free evolution for the whole window pi/J23.
ComplexMatrix refocusing_propagator_full(double tau_tilde, double omega_tilde,
                                         const SpinChainParams& p);

// Fidelity of the refocusing propagator against the common-frame target.
double fidelity_at(double tau_tilde, double omega_tilde,
                   const SpinChainParams& p);

struct LandscapeSample {
  double tau_tilde;
  double omega_tilde;
  double fidelity;
};

struct FidelityLandscape {
  int nx = 0;  // tau_tilde samples
  int ny = 0;  // omega_tilde samples
  std::vector<LandscapeSample> samples;  // row-major: tau outer, omega inner
};

// Uniform grid over [0,1]^2 inclusive of endpoints.
FidelityLandscape landscape_scan(const SpinChainParams& p, int nx, int ny);

struct FidelityOptimum {
  double tau_tilde = 0.0;
  double omega_tilde = 0.0;
  double fidelity = 0.0;
};

// Coarse 101x101 scan followed by a deterministic simplex descent on 1 - F,
// clamped to [0,1]^2.
FidelityOptimum optimize_fidelity(const SpinChainParams& p);

}  // namespace softpulse
