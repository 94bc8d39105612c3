#include "cosineq/cyclic_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cosineq {

namespace {

void check_cycle(std::span<const double> values) {
  if (values.size() < 3) {
    throw std::invalid_argument("cyclic vector: need at least 3 entries, got " +
                                std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw std::invalid_argument("cyclic vector: entry " + std::to_string(i + 1) +
                                  " must be strictly positive and finite");
    }
  }
}

}  // namespace

CyclicVector::CyclicVector(std::vector<double> values) : values_(std::move(values)) {
  check_cycle(values_);
}

double cyclic_window_sum(std::span<const double> x, std::size_t k) {
  const std::size_t n = x.size();
  check_cycle(x);
  if (k < 1 || k > n) {
    throw std::invalid_argument("cyclic_window_sum: window length " + std::to_string(k) +
                                " out of range [1, " + std::to_string(n) + "]");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
      prod *= x[(i + j) % n];
    }
    sum += prod;
  }
  return sum;
}

double cyclic_window_sum(const CyclicVector& x, std::size_t k) {
  return cyclic_window_sum(x.span(), k);
}

double phi(std::span<const double> x) {
  if (x.size() != 5) {
    throw std::invalid_argument("phi: expected 5 entries, got " + std::to_string(x.size()));
  }
  return cyclic_window_sum(x, 3);
}

double phi(const CyclicVector& x) { return phi(x.span()); }

double psi(std::span<const double> x) {
  if (x.size() != 7) {
    throw std::invalid_argument("psi: expected 7 entries, got " + std::to_string(x.size()));
  }
  return cyclic_window_sum(x, 4);
}

double psi(const CyclicVector& x) { return psi(x.span()); }

CyclicVector rotated(const CyclicVector& x, std::size_t shift) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = x[(i + shift) % n];
  }
  return CyclicVector(std::move(out));
}

CyclicVector reversed(const CyclicVector& x) {
  std::vector<double> out(x.values().rbegin(), x.values().rend());
  return CyclicVector(std::move(out));
}

CyclicVector scaled(const CyclicVector& x, double t) {
  std::vector<double> out(x.values());
  for (double& v : out) v *= t;
  return CyclicVector(std::move(out));
}

CyclicVector squared(const CyclicVector& x) {
  std::vector<double> out(x.values());
  for (double& v : out) v *= v;
  return CyclicVector(std::move(out));
}

}  // namespace cosineq
