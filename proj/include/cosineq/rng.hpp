#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cosineq/numeric.hpp"

namespace cosineq::rng {

// splitmix64 (Steele/Lea/Flood). Fully specified bit-for-bit, so sweeps are
// reproducible across platforms and thread counts; std:: distributions are
// implementation-defined and never used here.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // (0, 1), both ends excluded
  double uniform01_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }
};

// Decorrelated per-sample stream: sample index i of a sweep seeded with s
// draws from SplitMix64{mix_stream(s, i)}, independent of any other sample.
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g{seed ^ (0xD1B54A32D192ED03ull * (index + 1))};
  return g.next();
}

inline double log_uniform(SplitMix64& g, double lo, double hi) {
  return std::exp(std::log(lo) + g.uniform01() * (std::log(hi) - std::log(lo)));
}

inline std::vector<double> log_uniform_weights(SplitMix64& g, std::size_t n, double lo,
                                               double hi) {
  std::vector<double> w(n);
  for (double& v : w) v = log_uniform(g, lo, hi);
  return w;
}

// Uniform draw from the angle simplex {alpha_i > 0, sum = pi}: normalized
// unit exponentials (a flat Dirichlet), redrawn in the astronomically rare
// case an angle lands below min_angle.
inline std::vector<double> simplex_angles_pi(SplitMix64& g, std::size_t n, double min_angle) {
  std::vector<double> a(n);
  for (;;) {
    double sum = 0.0;
    for (double& v : a) {
      v = -std::log(g.uniform01_open());
      sum += v;
    }
    bool ok = true;
    for (double& v : a) {
      v *= kPi / sum;
      if (v < min_angle) ok = false;
    }
    if (ok) return a;
  }
}

}  // namespace cosineq::rng
