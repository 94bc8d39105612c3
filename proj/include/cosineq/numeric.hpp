#pragma once

#include <algorithm>
#include <cmath>

namespace cosineq {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// cos(pi/5) in its closed golden-ratio form (1+sqrt(5))/4. The pentagonal
// bounds use this constant; the test suite cross-checks it against
// std::cos(pi/5) at startup.
inline const double kCosPi5 = (1.0 + std::sqrt(5.0)) / 4.0;

// |a-b| measured against max(1, |a|, |b|): relative for large magnitudes,
// absolute near zero.
inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double rel_residual(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace cosineq
