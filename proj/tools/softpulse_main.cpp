// Command-line surface: pulse design, Bloch-Siegert tables, fidelity
// landscape scans, and the correlated-noise encode/decode demo.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "softpulse/bloch_siegert.hpp"
#include "softpulse/config.hpp"
#include "softpulse/gate_design.hpp"
#include "softpulse/pulse.hpp"
#include "softpulse/qec.hpp"
#include "softpulse/random_states.hpp"

namespace {

using namespace softpulse;

// All numeric output carries 6 significant digits.
std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// Accepts "pi", "2pi", "pi/2", "3pi/4", ... or a plain number in radians.
double parse_angle(const std::string& s) {
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return std::stod(s);
  double mult = 1.0;
  if (pos > 0) mult = std::stod(s.substr(0, pos));
  double div = 1.0;
  const std::string rest = s.substr(pos + 2);
  if (!rest.empty()) {
    if (rest[0] != '/') throw ValidationError("bad angle: " + s);
    div = std::stod(rest.substr(1));
  }
  return mult * M_PI / div;
}

int run_bs(const MoleculeConfig& cfg, double omega1_hz, double tau_s) {
  const SpinChainParams p = to_params(cfg);
  const double omega1 = 2.0 * M_PI * omega1_hz;
  std::cout << "spectator,epsilon,approx_rad,exact_rad,rel_err\n";
  for (int spectator : {2, 3}) {
    const BsReport r = bs_report(p, omega1, tau_s, spectator);
    std::cout << spectator << "," << num(r.epsilon) << ","
              << num(r.approx_phase) << "," << num(r.exact_phase) << ","
              << num(r.relative_error) << "\n";
  }
  return 0;
}

int run_solve(const MoleculeConfig& cfg, const std::string& alpha_str) {
  const SpinChainParams p = to_params(cfg);
  const double alpha = parse_angle(alpha_str);
  const int n = min_valid_n(alpha, p.j12, p.j23);
  const SoftPulseSolution sol = soft_amplitude(alpha, p.j12, p.j23, n);
  const CancellationResult chk =
      verify_cancellation(sol.omega_plus, alpha, p, 1e-8);
  std::cout << "{\"n\": " << n << ", \"omega1_hz\": "
            << num(sol.omega_plus / (2.0 * M_PI))
            << ", \"tau_ms\": " << num(sol.tau * 1e3)
            << ", \"cancellation_ok\": " << (chk.ok ? "true" : "false")
            << ", \"phi_rad\": " << num(chk.phi) << "}\n";
  return 0;
}

int run_simulate(const MoleculeConfig& cfg, const std::string& seq_path,
                 const std::string& target) {
  const SpinChainParams p = to_params(cfg);
  std::ifstream in(seq_path);
  if (!in) throw ParseError("cannot open sequence file " + seq_path);
  const PulseSequence seq = read_sequence(in);
  const ComplexMatrix u = propagate(seq, p);
  std::ostringstream os;
  os << "{\"dim\": " << u.rows()
     << ", \"unitarity_residual\": " << num(unitarity_residual(u));
  if (target == "common")
    os << ", \"fidelity_vs_common\": "
       << num(propagator_fidelity(target_common_frame(p), u));
  else if (target == "entangler")
    os << ", \"fidelity_vs_entangler\": "
       << num(propagator_fidelity(target_entangler(M_PI), u));
  os << ", \"matrix\": [";
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      os << (j ? ", [" : "[") << num(u(i, j).real()) << ", "
         << num(u(i, j).imag()) << "]";
    os << "]";
  }
  os << "]}";
  std::cout << os.str() << "\n";
  return 0;
}

int run_landscape(const MoleculeConfig& cfg, int nx, int ny) {
  const FidelityLandscape ls = landscape_scan(to_params(cfg), nx, ny);
  std::cout << "tau_tilde,omega_tilde,fidelity\n";
  for (const LandscapeSample& s : ls.samples)
    std::cout << num(s.tau_tilde) << "," << num(s.omega_tilde) << ","
              << num(s.fidelity) << "\n";
  return 0;
}

int run_optimize(const MoleculeConfig& cfg) {
  const SpinChainParams p = to_params(cfg);
  const FidelityOptimum opt = optimize_fidelity(p);
  const double tau = opt.tau_tilde * M_PI / (2.0 * p.j23);
  const double omega1 = tau > 0.0 ? opt.omega_tilde * M_PI / tau : 0.0;
  std::cout << "{\"tau_tilde\": " << num(opt.tau_tilde)
            << ", \"omega_tilde\": " << num(opt.omega_tilde)
            << ", \"fidelity\": " << num(opt.fidelity)
            << ", \"tau_s\": " << num(tau)
            << ", \"omega1_hz\": " << num(omega1 / (2.0 * M_PI)) << "}\n";
  return 0;
}

int run_qec(const MoleculeConfig& cfg, bool full, const std::string& probs,
            int trials) {
  const SpinChainParams p = to_params(cfg);
  CorrelatedChannel ch;
  std::stringstream ss(probs);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',') && i < 4) ch.p[i++] = std::stod(tok);
  if (i != 4) throw ValidationError("qec: expected 4 probabilities");

  std::ostringstream os;
  os << "{\"identities\": [";
  const auto checks = operator_identity_check(1e-9);
  for (int k = 0; k < 4; ++k) {
    if (k) os << ", ";
    os << "{\"kraus_index\": " << k << ", \"ok\": "
       << (checks[k].ok ? "true" : "false")
       << ", \"residual\": " << num(checks[k].residual)
       << ", \"phase_rad\": " << num(checks[k].phase) << "}";
  }
  os << "]";

  double fmin = 1.0, fmean = 0.0;
  if (full) {
    const RecoveryStats stats = soft_pulse_recovery_fidelity(p, ch, trials);
    fmin = stats.min;
    fmean = stats.mean;
  } else {
    StateSampler sampler(0x5057u);
    for (int t = 0; t < trials; ++t) {
      const StateVector u = sampler.qubit_state();
      const StateVector psi = sampler.qubit_state();
      const StateVector v = sampler.qubit_state();
      const double f = recovery_check(u, v, psi, ch, true, p);
      fmin = std::min(fmin, f);
      fmean += f;
    }
    fmean /= trials;
  }
  os << ", \"mode\": \"" << (full ? "full" : "ideal")
     << "\", \"recovery_min\": " << num(fmin)
     << ", \"recovery_mean\": " << num(fmean) << "}";
  std::cout << os.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft-pulse entangling gate design for a three-spin chain"};
  app.require_subcommand(1);

  std::string config_path;
  std::string alpha_str = "pi";
  std::string seq_path;
  std::string target = "none";
  std::string probs = "1,0,0,0";
  double omega1_hz = 714.0;
  double tau_s = 0.700e-3;
  int nx = 101, ny = 101, trials = 50;
  bool full = false;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Molecule parameter file (JSON)")
        ->required();
  };

  CLI::App* bs = app.add_subcommand(
      "bs", "Bloch-Siegert phase table for both spectators (CSV)");
  add_config(bs);
  bs->add_option("--omega1-hz", omega1_hz, "Pulse amplitude (Hz)");
  bs->add_option("--tau-s", tau_s, "Pulse duration (s)");

  CLI::App* solve = app.add_subcommand(
      "solve", "Soft-pulse amplitude solving the cancellation condition");
  add_config(solve);
  solve->add_option("--alpha", alpha_str, "Gate angle (e.g. pi, pi/2, 1.57)");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Propagate a pulse sequence file exactly");
  add_config(simulate);
  simulate->add_option("--sequence", seq_path, "Sequence file (JSON)")
      ->required();
  simulate->add_option("--fidelity-target", target,
                       "Compare against a target: common | entangler | none");

  CLI::App* landscape = app.add_subcommand(
      "landscape",
      "Fidelity grid over normalized (tau_tilde, omega_tilde) in [0,1]^2 "
      "(CSV). The tau_tilde=0 column is pure free evolution.");
  add_config(landscape);
  landscape->add_option("--nx", nx, "tau_tilde samples (>= 2)");
  landscape->add_option("--ny", ny, "omega_tilde samples (>= 2)");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Locate the fidelity optimum (coarse scan + refinement)");
  add_config(optimize);

  CLI::App* qec = app.add_subcommand(
      "qec", "Correlated-noise encode/decode identities and recovery run");
  add_config(qec);
  qec->add_flag("--full", full, "Use full-model soft-pulse gates");
  qec->add_option("--p", probs, "Channel probabilities p0,p1,p2,p3");
  qec->add_option("--trials", trials, "Random state draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    const MoleculeConfig cfg = parse_config(config_path);
    if (bs->parsed()) return run_bs(cfg, omega1_hz, tau_s);
    if (solve->parsed()) return run_solve(cfg, alpha_str);
    if (simulate->parsed()) return run_simulate(cfg, seq_path, target);
    if (landscape->parsed()) return run_landscape(cfg, nx, ny);
    if (optimize->parsed()) return run_optimize(cfg);
    if (qec->parsed()) return run_qec(cfg, full, probs, trials);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
