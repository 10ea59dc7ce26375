#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "core/types.hpp"

namespace ipent {

// Deterministic, portable random stream.
//
// The generator is splitmix64: the state advances by 0x9E3779B97F4A7C15 and
// each output is the finalizer of the new state. Doubles in [0, 1) are the
// top 53 bits of an output scaled by 2^-53. Standard normals come from
// Box-Muller on one pair of consecutive uniforms (u1 mapped to (0, 1] to
// avoid log(0)); a complex normal entry consumes exactly one such pair,
// real part first. Any implementation following this recipe reproduces the
// same streams for the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // One Box-Muller pair of independent standard normals.
  void next_gaussian_pair(double& a, double& b) {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    a = r * std::cos(t);
    b = r * std::sin(t);
  }

  // Rotation-invariant complex normal: independent N(0,1) real and
  // imaginary parts from a single Box-Muller pair.
  Complex next_complex_gaussian() {
    double re = 0.0;
    double im = 0.0;
    next_gaussian_pair(re, im);
    return Complex(re, im);
  }

 private:
  std::uint64_t state_;
};

}  // namespace ipent
