#pragma once

#include <iosfwd>
#include <vector>

#include "softpulse/spin_system.hpp"

namespace softpulse {

enum class Model { Reduced, Full };

// One rectangular rf segment. amplitude = 0 means free evolution;
// zero-duration segments contribute identity.
struct PulseSegment {
  double duration = 0.0;   // s
  double amplitude = 0.0;  // rad/s
  double phase = 0.0;      // rad
  Model model = Model::Reduced;
};

// Ordered schedule; the first segment acts first in time. All segments
// must share one model selector.
struct PulseSequence {
  std::vector<PulseSegment> segments;
};

// Exact propagator of the schedule: later segments multiply on the left.
ComplexMatrix propagate(const PulseSequence& seq, const SpinChainParams& p);

// [free(t*/2-tau), pulse(tau), free(t*/2-tau), pulse(tau)], phase 0.
// Throws BadTiming if tau > t_star/2 or tau < 0.
PulseSequence refocusing_sequence(double t_star, double tau, double omega1,
                                  Model model);

// Single weak rectangular pulse of duration alpha/J23 with the amplitude
// solving the cancellation condition (smallest valid n).
PulseSequence soft_pulse_sequence(double alpha, const SpinChainParams& p);

// Instantaneous-pulse limit of the refocusing scheme under the reduced
// model: X^2 e^{-iH(0)t*/2} X^2 e^{-iH(0)t*/2}.
ComplexMatrix hard_limit_propagator(double t_star, const SpinChainParams& p);

// Sequence dump format: {"model": "...", "segments": [{duration_s,
// amplitude_hz, phase_rad}, ...]}.
PulseSequence read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const PulseSequence& seq);

}  // namespace softpulse
