#include "cosineq/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cosineq/numeric.hpp"
#include "cosineq/rng.hpp"
#include "oracles.hpp"

using namespace cosineq;

namespace {

constexpr double kFiveCosPi5 = 4.045084971874737;  // 5 cos(pi/5)
constexpr double kSinPi5 = 0.5877852522924731;     // sin(pi/5)

WeightVector random_weights(rng::SplitMix64& g, std::size_t n) {
  return WeightVector(rng::log_uniform_weights(g, n, 0.1, 10.0));
}

// finite-difference projected gradient norm of the cosine sum at alpha
double fd_projected_gradient_norm(const WeightVector& a, std::span<const double> alpha,
                                  double step) {
  const std::size_t n = a.size();
  std::vector<double> grad(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto eval = [&](double delta) {
      double v = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double ang = (j == i) ? alpha[j] + delta : alpha[j];
        v += a[j] * std::cos(ang);
      }
      return v;
    };
    grad[i] = (eval(step) - eval(-step)) / (2.0 * step);
  }
  double mean = 0.0;
  for (double v : grad) mean += v;
  mean /= static_cast<double>(n);
  double norm_sq = 0.0;
  for (double v : grad) norm_sq += (v - mean) * (v - mean);
  return std::sqrt(norm_sq);
}

}  // namespace

TEST_CASE("solve_stationary: symmetric five-weight case") {
  const auto point = solve_stationary(WeightVector({1, 1, 1, 1, 1}), {});
  REQUIRE(point.has_value());
  CHECK(point->lambda == doctest::Approx(kSinPi5).epsilon(1e-12));
  for (double a : point->alpha.values()) {
    CHECK(a == doctest::Approx(kPi / 5).epsilon(1e-12));
  }
  CHECK(point->value == doctest::Approx(kFiveCosPi5).epsilon(1e-12));
  CHECK(point->angle_sum_residual <= 1e-12);
  CHECK(point->stationarity_residual <= 1e-9);
  CHECK(point->obtuse_indices.empty());
}

TEST_CASE("solve_stationary: symmetric three-weight cross-check") {
  const auto point = solve_stationary(WeightVector({1, 1, 1}), {});
  REQUIRE(point.has_value());
  CHECK(point->lambda == doctest::Approx(std::sin(kPi / 3)).epsilon(1e-12));
  for (double a : point->alpha.values()) {
    CHECK(a == doctest::Approx(kPi / 3).epsilon(1e-12));
  }
}

TEST_CASE("solve_stationary: mask validation") {
  const WeightVector a({1, 1, 1, 1, 1});
  const std::vector<int> two = {0, 1};
  CHECK_THROWS_AS(solve_stationary(a, two), std::invalid_argument);
  const std::vector<int> out_of_range = {5};
  CHECK_THROWS_AS(solve_stationary(a, out_of_range), std::invalid_argument);
}

TEST_CASE("solve_stationary: a dominant small weight leaves the all-acute solve empty") {
  // sum of arcsin(0.1/a_i) at the bracket end stays below pi
  const WeightVector a({0.1, 0.5, 0.5, 0.5, 0.5});
  CHECK_FALSE(solve_stationary(a, {}).has_value());
}

TEST_CASE("solve_stationary: obtuse branch succeeds when the all-acute solve fails") {
  // 0.36 < sin(pi/8): no all-acute solution, but an obtuse angle on the
  // smallest weight yields one
  const WeightVector a({0.36, 1, 1, 1, 1});
  CHECK_FALSE(solve_stationary(a, {}).has_value());
  const std::vector<int> mask = {0};
  const auto point = solve_stationary(a, mask);
  REQUIRE(point.has_value());
  CHECK(point->alpha[0] > kPi / 2);
  CHECK(point->angle_sum_residual <= 1e-12);
  CHECK(point->stationarity_residual <= 1e-9);
}

TEST_CASE("stationary points satisfy the residual contracts on random weights") {
  rng::SplitMix64 g{321};
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const WeightVector a = random_weights(g, 5);
    for (int mask = -1; mask < 5; ++mask) {
      std::vector<int> indices;
      if (mask >= 0) indices.push_back(mask);
      const auto point = solve_stationary(a, indices);
      if (!point) continue;
      ++found;
      CHECK(point->angle_sum_residual <= 1e-12);
      CHECK(point->stationarity_residual <= 1e-9);
      CHECK(point->lambda > 0.0);
      CHECK(point->lambda <= *std::min_element(a.span().begin(), a.span().end()) + 1e-15);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("max_cosine_sum: symmetric equality case") {
  const auto report = max_cosine_sum(WeightVector({1, 1, 1, 1, 1}), 1e-9);
  CHECK(std::abs(report.max_value - kFiveCosPi5) <= 1e-6);
  for (double a : report.maximizer.values()) {
    CHECK(std::abs(a - kPi / 5) <= 1e-5);
  }
  CHECK(std::abs(report.gap_strong) <= 1e-9);
  CHECK(report.equality_found);
  CHECK(report.methods_agree);
  CHECK(report.method == SharpnessMethod::BothAgree);
}

TEST_CASE("max_cosine_sum: sorted example stays below the strong bound") {
  const auto report = max_cosine_sum(WeightVector({1, 2, 3, 4, 5}), 1e-9);
  CHECK(report.max_value <= 14.29263356729074 + 1e-9);
  CHECK(report.gap_strong <= report.gap_normal + 1e-12);
}

TEST_CASE("max_cosine_sum: scale invariance") {
  const WeightVector base({0.7, 1.1, 2.9, 3.1, 4.3});
  const auto ref = max_cosine_sum(base, 1e-9);
  for (double t : {1e-3, 3.0, 1e3}) {
    std::vector<double> w(base.values());
    for (double& v : w) v *= t;
    const auto scaled = max_cosine_sum(WeightVector(w), 1e-9);
    CHECK(rel_close(scaled.max_value / t, ref.max_value, 1e-9));
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(std::abs(scaled.maximizer[i] - ref.maximizer[i]) <= 1e-9);
    }
  }
}

TEST_CASE("max_cosine_sum: boundary-supremum weights are handled by gradient ascent") {
  // no stationary point exists; the supremum sits at a degenerate corner
  // (alpha_1 -> pi) with value 4*1 - 0.2 = 3.8, approached but not attained
  const auto report = max_cosine_sum(WeightVector({0.2, 1, 1, 1, 1}), 1e-9);
  CHECK(std::isnan(report.stationary_value));
  CHECK(report.method == SharpnessMethod::GradientAscent);
  CHECK(report.max_value <= 3.8);
  CHECK(report.max_value >= 3.8 - 1e-6);
}

TEST_CASE("max_cosine_sum: methods agree and respect the bound on random weights") {
  rng::SplitMix64 g{20240809};
  for (int trial = 0; trial < 30; ++trial) {
    const WeightVector a = random_weights(g, 5);
    const auto report = max_cosine_sum(a, 1e-9);
    CHECK(report.methods_agree);
    CHECK(report.gap_strong >= -1e-9);
    if (!std::isnan(report.stationary_value) && !std::isnan(report.gradient_value)) {
      CHECK(std::abs(report.stationary_value - report.gradient_value) <= 1e-6);
    }
    // stationarity of the reported maximizer, via central differences
    CHECK(fd_projected_gradient_norm(a, report.maximizer.span(), 1e-6) <= 1e-6);
  }
}

TEST_CASE("max_cosine_sum: heptagonal weights use the heptagonal right side") {
  const auto report = max_cosine_sum(WeightVector(std::vector<double>(7, 1.0)), 1e-9);
  CHECK(std::abs(report.max_value - 6.306782075316934) <= 1e-6);
  CHECK(std::abs(report.gap_strong) <= 1e-9);
  CHECK(report.equality_found);
  CHECK(report.gap_strong == doctest::Approx(report.gap_normal));
}

TEST_CASE("max_cosine_sum: argument validation") {
  CHECK_THROWS_AS(max_cosine_sum(WeightVector({1, 1, 1, 1, 1}), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_cosine_sum(WeightVector({1, 1, 1, 1}), 1e-9),
                  std::invalid_argument);
}

TEST_CASE("grid oracle: no coarse simplex point beats the solver") {
  rng::SplitMix64 g{99999};
  for (int trial = 0; trial < 5; ++trial) {
    const WeightVector a = random_weights(g, 5);
    const auto report = max_cosine_sum(a, 1e-9);
    CHECK(oracle::grid_max_cosine(a.span(), 60) <= report.max_value + 1e-3);
  }
}
