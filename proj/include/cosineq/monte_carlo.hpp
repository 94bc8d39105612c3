#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cosineq/bounds.hpp"

namespace cosineq {

// One sweep draws `samples` independent (weights, angles) pairs — weights
// log-uniform on [weight_lo, weight_hi], angles uniform on the simplex —
// and evaluates every bound applicable to n. Sample i uses its own RNG
// stream derived from (seed, i), so results are independent of threading
// and chunking.
struct SweepConfig {
  int n = 5;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  bool experimental = false;  // required for odd n >= 9
  int threads = 1;
  double weight_lo = 0.1;
  double weight_hi = 10.0;
};

struct SampleRecord {
  std::uint64_t index;
  std::vector<double> weights;
  std::vector<double> angles;
  std::vector<BoundReport> checks;
  double min_gap;  // over the checks
};

struct SweepSummary {
  SweepConfig config;
  std::uint64_t violations = 0;  // checks with gap < -tolerance
  double min_gap = 0.0;
  std::uint64_t argmin_index = 0;
  BoundKind argmin_kind = BoundKind::PentagonalNormal;
  std::vector<double> argmin_weights;
  std::vector<double> argmin_angles;
};

// Runs the sweep; when on_sample is set it receives every record in sample
// order regardless of thread count. Ties on min_gap resolve to the smallest
// sample index.
SweepSummary monte_carlo_verify(const SweepConfig& config,
                                const std::function<void(const SampleRecord&)>& on_sample = {});

// The checks a single sample undergoes: pentagonal normal + strong for n=5,
// heptagonal for n=7, the experimental window bound for odd n >= 9.
std::vector<BoundReport> applicable_checks(const WeightVector& a, const AngleVector& alpha,
                                           double tolerance, bool experimental);

}  // namespace cosineq
