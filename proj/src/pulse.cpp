#include "softpulse/pulse.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "softpulse/gate_design.hpp"

namespace softpulse {

ComplexMatrix propagate(const PulseSequence& seq, const SpinChainParams& p) {
  ComplexMatrix u = ComplexMatrix::Identity(8, 8);
  for (const PulseSegment& seg : seq.segments) {
    if (!seq.segments.empty() && seg.model != seq.segments.front().model)
      throw BadTiming("propagate: segments must share one model selector");
    if (seg.duration < 0.0)
      throw BadTiming("propagate: negative segment duration");
    if (seg.duration == 0.0) continue;
    const ComplexMatrix h =
        seg.model == Model::Reduced
            ? reduced_hamiltonian(p, seg.amplitude, seg.phase)
            : full_hamiltonian(p, seg.amplitude, seg.phase);
    u = expm_unitary(h, seg.duration) * u;
  }
  return u;
}

PulseSequence refocusing_sequence(double t_star, double tau, double omega1,
                                  Model model) {
  if (tau < 0.0 || tau > t_star / 2.0)
    throw BadTiming("refocusing_sequence: need 0 <= tau <= t_star/2");
  const double dt = t_star / 2.0 - tau;
  PulseSequence seq;
  seq.segments = {{dt, 0.0, 0.0, model},
                  {tau, omega1, 0.0, model},
                  {dt, 0.0, 0.0, model},
                  {tau, omega1, 0.0, model}};
  return seq;
}

PulseSequence soft_pulse_sequence(double alpha, const SpinChainParams& p) {
  const int n = min_valid_n(alpha, p.j12, p.j23);
  const SoftPulseSolution sol = soft_amplitude(alpha, p.j12, p.j23, n);
  PulseSequence seq;
  seq.segments = {{sol.tau, sol.omega_plus, 0.0, Model::Reduced}};
  return seq;
}

ComplexMatrix hard_limit_propagator(double t_star, const SpinChainParams& p) {
  if (t_star <= 0.0) throw BadTiming("hard_limit_propagator: t_star must be > 0");
  const ComplexMatrix x2 = expm_unitary(spin_op(Axis::X, 1, 3), M_PI);
  const ComplexMatrix half =
      expm_unitary(reduced_hamiltonian(p, 0.0), t_star / 2.0);
  return x2 * half * x2 * half;
}

PulseSequence read_sequence(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("sequence: ") + e.what());
  }
  if (!j.contains("model") || !j.contains("segments"))
    throw ParseError("sequence: expected keys 'model' and 'segments'");
  const std::string m = j.at("model").get<std::string>();
  Model model;
  if (m == "reduced")
    model = Model::Reduced;
  else if (m == "full")
    model = Model::Full;
  else
    throw ValidationError("sequence: model must be 'reduced' or 'full'");
  PulseSequence seq;
  for (const auto& rec : j.at("segments")) {
    PulseSegment seg;
    seg.duration = rec.at("duration_s").get<double>();
    seg.amplitude = 2.0 * M_PI * rec.at("amplitude_hz").get<double>();
    seg.phase = rec.at("phase_rad").get<double>();
    seg.model = model;
    if (seg.duration < 0.0)
      throw ValidationError("sequence: duration_s must be >= 0");
    seq.segments.push_back(seg);
  }
  return seq;
}

void write_sequence(std::ostream& out, const PulseSequence& seq) {
  nlohmann::json j;
  j["model"] = (!seq.segments.empty() &&
                seq.segments.front().model == Model::Full)
                   ? "full"
                   : "reduced";
  j["segments"] = nlohmann::json::array();
  for (const PulseSegment& seg : seq.segments)
    j["segments"].push_back({{"duration_s", seg.duration},
                             {"amplitude_hz", seg.amplitude / (2.0 * M_PI)},
                             {"phase_rad", seg.phase}});
  out << j.dump(2) << "\n";
}

}  // namespace softpulse
