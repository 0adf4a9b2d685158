#include "softpulse/gate_design.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "softpulse/pulse.hpp"

namespace softpulse {

namespace {
double radicand(double alpha, double j12, double j23, int n) {
  return 4.0 * M_PI * M_PI * n * n * j23 * j23 / (alpha * alpha) -
         j12 * j12 / 4.0;
}
}  // namespace

int min_valid_n(double alpha, double j12, double j23) {
  if (alpha <= 0.0) throw ZeroAlpha("min_valid_n: alpha must be > 0");
  if (j23 <= 0.0) throw ValidationError("min_valid_n: j23 must be > 0");
  int n = 1;
  while (radicand(alpha, j12, j23, n) <= 0.0) ++n;
  return n;
}

SoftPulseSolution soft_amplitude(double alpha, double j12, double j23, int n) {
  if (alpha <= 0.0) throw ZeroAlpha("soft_amplitude: alpha must be > 0");
  const double r = radicand(alpha, j12, j23, n);
  if (r <= 0.0) throw NoValidN("soft_amplitude: radicand not positive");
  SoftPulseSolution sol;
  sol.n = n;
  sol.omega_plus = std::sqrt(r);
  sol.omega_minus = -sol.omega_plus;
  sol.tau = alpha / j23;
  return sol;
}

CancellationResult verify_cancellation(double omega1, double alpha,
                                       const SpinChainParams& p, double tol) {
  if (alpha <= 0.0) throw ZeroAlpha("verify_cancellation: alpha must be > 0");
  const ComplexMatrix residual_h =
      omega1 * spin_op(Axis::X, 1, 3) +
      p.j12 * spin_op(Axis::Z, 1, 3) * spin_op(Axis::Z, 2, 3);
  const ComplexMatrix u = expm_unitary(residual_h, alpha / p.j23);
  const PhaseIdentityResult r = identity_up_to_phase(u, tol);
  CancellationResult out;
  out.ok = r.is_phase_identity;
  if (!out.ok) {
    out.phi = r.phi;
    return out;
  }
  // The exponent is traceless, so phi sits on the 2 pi k / 8 lattice.
  const double step = M_PI / 4.0;
  const double snapped = step * std::round(r.phi / step);
  out.ok = std::abs(r.phi - snapped) < 1e-6;
  out.phi = out.ok ? snapped : r.phi;
  return out;
}

double propagator_fidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows())
    throw BadDimension("propagator_fidelity: dimension mismatch");
  if (unitarity_residual(u) > 1e-8 || unitarity_residual(v) > 1e-8)
    throw NotUnitary("propagator_fidelity: arguments must be unitary");
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

ComplexMatrix refocusing_propagator_full(double tau_tilde, double omega_tilde,
                                         const SpinChainParams& p) {
  if (tau_tilde < 0.0 || tau_tilde > 1.0)
    throw BadTiming("refocusing_propagator_full: tau_tilde outside [0,1]");
  const double t_star = M_PI / p.j23;
  const double tau = tau_tilde * M_PI / (2.0 * p.j23);
  const double omega1 = tau > 0.0 ? omega_tilde * M_PI / tau : 0.0;
  return propagate(refocusing_sequence(t_star, tau, omega1, Model::Full), p);
}

double fidelity_at(double tau_tilde, double omega_tilde,
                   const SpinChainParams& p) {
  return propagator_fidelity(target_common_frame(p),
                             refocusing_propagator_full(tau_tilde, omega_tilde, p));
}

FidelityLandscape landscape_scan(const SpinChainParams& p, int nx, int ny) {
  if (nx < 2 || ny < 2)
    throw ValidationError("landscape_scan: need nx, ny >= 2");
  FidelityLandscape ls;
  ls.nx = nx;
  ls.ny = ny;
  ls.samples.reserve(static_cast<size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    const double tt = static_cast<double>(i) / (nx - 1);
    for (int j = 0; j < ny; ++j) {
      const double wt = static_cast<double>(j) / (ny - 1);
      ls.samples.push_back({tt, wt, fidelity_at(tt, wt, p)});
    }
  }
  return ls;
}

namespace {

struct Vertex {
  double x, y, f;  // f = 1 - fidelity at the clamped point
};

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

Vertex eval(double x, double y, const SpinChainParams& p) {
  x = clamp01(x);
  y = clamp01(y);
  return {x, y, 1.0 - fidelity_at(x, y, p)};
}

}  // namespace

FidelityOptimum optimize_fidelity(const SpinChainParams& p) {
  const FidelityLandscape ls = landscape_scan(p, 101, 101);
  const auto best = std::max_element(
      ls.samples.begin(), ls.samples.end(),
      [](const LandscapeSample& a, const LandscapeSample& b) {
        return a.fidelity < b.fidelity;
      });

  // Nelder-Mead on 1 - F with a fixed simplex seeded at the best grid cell.
  const double h = 0.02;
  std::array<Vertex, 3> s = {
      eval(best->tau_tilde, best->omega_tilde, p),
      eval(best->tau_tilde + (best->tau_tilde + h <= 1.0 ? h : -h),
           best->omega_tilde, p),
      eval(best->tau_tilde,
           best->omega_tilde + (best->omega_tilde + h <= 1.0 ? h : -h), p)};

  constexpr int kMaxIter = 500;
  for (int it = 0; it < kMaxIter; ++it) {
    std::sort(s.begin(), s.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const double size =
        std::max({std::abs(s[1].x - s[0].x), std::abs(s[2].x - s[0].x),
                  std::abs(s[1].y - s[0].y), std::abs(s[2].y - s[0].y)});
    if (size < 1e-4 && s[2].f - s[0].f < 1e-6) break;

    const double cx = (s[0].x + s[1].x) / 2.0;
    const double cy = (s[0].y + s[1].y) / 2.0;
    const Vertex refl = eval(2.0 * cx - s[2].x, 2.0 * cy - s[2].y, p);
    if (refl.f < s[0].f) {
      const Vertex exp_v = eval(3.0 * cx - 2.0 * s[2].x,
                                3.0 * cy - 2.0 * s[2].y, p);
      s[2] = exp_v.f < refl.f ? exp_v : refl;
    } else if (refl.f < s[1].f) {
      s[2] = refl;
    } else {
      const Vertex contr = eval((cx + s[2].x) / 2.0, (cy + s[2].y) / 2.0, p);
      if (contr.f < s[2].f) {
        s[2] = contr;
      } else {
        s[1] = eval((s[0].x + s[1].x) / 2.0, (s[0].y + s[1].y) / 2.0, p);
        s[2] = eval((s[0].x + s[2].x) / 2.0, (s[0].y + s[2].y) / 2.0, p);
      }
    }
  }
  std::sort(s.begin(), s.end(),
            [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

  FidelityOptimum opt;
  opt.tau_tilde = s[0].x;
  opt.omega_tilde = s[0].y;
  opt.fidelity = 1.0 - s[0].f;
  if (opt.fidelity < best->fidelity) {
    opt.tau_tilde = best->tau_tilde;
    opt.omega_tilde = best->omega_tilde;
    opt.fidelity = best->fidelity;
  }
  return opt;
}

}  // namespace softpulse
