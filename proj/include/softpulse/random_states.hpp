#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "softpulse/linalg.hpp"

namespace softpulse {

// Seeded sampler with hand-rolled transforms so that draws are
// bit-for-bit reproducible across standard library implementations.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(1.0 - u1)) *
           std::cos(2.0 * M_PI * u2);
  }

  // Haar-random single-qubit pure state.
  StateVector qubit_state() {
    StateVector v(2);
    v << Complex(normal(), normal()), Complex(normal(), normal());
    return v / v.norm();
  }

  // Random probability vector on the 3-simplex.
  std::array<double, 4> probabilities() {
    std::array<double, 4> p{};
    double sum = 0.0;
    for (double& x : p) {
      x = -std::log(1.0 - uniform());
      sum += x;
    }
    for (double& x : p) x /= sum;
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace softpulse
