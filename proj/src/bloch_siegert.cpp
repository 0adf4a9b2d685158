#include "softpulse/bloch_siegert.hpp"

#include <cmath>

#include "softpulse/errors.hpp"

namespace softpulse {

double bs_phase_rect(double omega1, double delta, double tau) {
  if (delta == 0.0) throw ZeroDetuning("bs_phase_rect: delta must be nonzero");
  return omega1 * omega1 * tau / (2.0 * delta);
}

double bs_phase_pi_pulse(double omega1, double delta) {
  if (delta == 0.0)
    throw ZeroDetuning("bs_phase_pi_pulse: delta must be nonzero");
  if (omega1 == 0.0)
    throw ZeroAmplitude("bs_phase_pi_pulse: omega1 must be nonzero");
  return std::abs(omega1) * M_PI / (2.0 * delta);
}

double exact_z_phase_excess(double omega1, double delta, double tau) {
  if (delta == 0.0)
    throw ZeroDetuning("exact_z_phase_excess: delta must be nonzero");
  const double eps = omega1 / delta;
  return delta * (std::sqrt(1.0 + eps * eps) - 1.0) * tau;
}

BsReport bs_report(const SpinChainParams& p, double omega1, double tau,
                   int spectator) {
  if (spectator != 2 && spectator != 3)
    throw BadIndex("bs_report: spectator must be 2 or 3");
  const double delta = spectator == 2 ? p.delta12 : p.delta13;
  if (delta == 0.0)
    throw ZeroDetuning("bs_report: spectator detuning must be nonzero");
  BsReport r;
  if (omega1 == 0.0) return r;
  r.epsilon = omega1 / delta;
  r.approx_phase = bs_phase_rect(omega1, delta, tau);
  r.exact_phase = exact_z_phase_excess(omega1, delta, tau);
  if (r.exact_phase != 0.0)
    r.relative_error =
        std::abs(r.approx_phase - r.exact_phase) / std::abs(r.exact_phase);
  return r;
}

}  // namespace softpulse
