#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cosineq {

// Ordered strictly positive reals treated as a cycle (index arithmetic wraps
// mod n). Indices are 0-based in code; printed output uses 1-based positions.
class CyclicVector {
 public:
  explicit CyclicVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::span<const double> span() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// Sum over all n cyclic windows of the product of k consecutive entries:
//   sum_{i=0..n-1}  x[i] * x[i+1] * ... * x[i+k-1]   (indices mod n).
// Requires 1 <= k <= n and n >= 3.
double cyclic_window_sum(std::span<const double> x, std::size_t k);
double cyclic_window_sum(const CyclicVector& x, std::size_t k);

// Window-3 form on five entries, the quantity minimized by arrangement
// search: x1x2x3 + x2x3x4 + x3x4x5 + x4x5x1 + x5x1x2.
double phi(std::span<const double> x);
double phi(const CyclicVector& x);

// Window-4 form on seven entries.
double psi(std::span<const double> x);
double psi(const CyclicVector& x);

CyclicVector rotated(const CyclicVector& x, std::size_t shift);
CyclicVector reversed(const CyclicVector& x);
CyclicVector scaled(const CyclicVector& x, double t);
CyclicVector squared(const CyclicVector& x);

}  // namespace cosineq
