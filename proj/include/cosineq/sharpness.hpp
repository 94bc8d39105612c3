#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cosineq/bounds.hpp"

namespace cosineq {

// A point satisfying the first-order condition a_i sin(alpha_i) = lambda on
// the angle simplex. Angles on the obtuse branch use pi - asin(lambda/a_i).
struct StationaryPoint {
  AngleVector alpha;
  double lambda;
  double value;  // cosine_sum at alpha
  std::vector<int> obtuse_indices;
  double angle_sum_residual;     // |sum alpha - pi| at the returned lambda
  double stationarity_residual;  // max_i |a_i sin(alpha_i) - lambda|
};

// Solves sum_i alpha_i(lambda) = pi for lambda in (0, min a_i] with the
// given obtuse branch assignment (at most one index: two obtuse angles
// already exceed pi). Returns nothing when no such lambda exists. With an
// obtuse index the angle sum need not be monotone in lambda; a dense scan
// locates every sign change and the best-valued root is returned.
std::optional<StationaryPoint> solve_stationary(const WeightVector& a,
                                                std::span<const int> obtuse_mask);

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SharpnessMethod { LambdaBisection, GradientAscent, BothAgree };

std::string_view to_string(SharpnessMethod method) noexcept;

struct SharpnessReport {
  double max_value;
  AngleVector maximizer;
  double gap_strong;  // sharpest right side minus max_value
  double gap_normal;  // given-order right side minus max_value
  bool equality_found;
  SharpnessMethod method;
  bool methods_agree;       // false only when both methods ran and disagree
  double stationary_value;  // NaN when no stationary candidate exists
  double gradient_value;    // NaN when gradient ascent found nothing
  double lambda;            // multiplier at the stationary maximizer; NaN without one
};

// Maximizes sum a_i cos(alpha_i) over the angle simplex for 5 or 7 weights:
// stationary candidates for every admissible branch mask, cross-checked by
// multi-start projected gradient ascent. For n=7 both gaps are measured
// against the heptagonal right side (no sharpened arrangement form exists).
SharpnessReport max_cosine_sum(const WeightVector& a, double tol);

}  // namespace cosineq
