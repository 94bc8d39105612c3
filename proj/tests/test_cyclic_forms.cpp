#include "cosineq/cyclic_forms.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cosineq/numeric.hpp"
#include "cosineq/rng.hpp"
#include "oracles.hpp"

using namespace cosineq;

namespace {

CyclicVector random_cycle(rng::SplitMix64& g, std::size_t n) {
  return CyclicVector(rng::log_uniform_weights(g, n, 0.1, 10.0));
}

}  // namespace

TEST_CASE("cyclic_window_sum matches the hand-expanded examples") {
  CHECK(cyclic_window_sum(CyclicVector({1, 1, 1, 1, 1}), 3) == doctest::Approx(5.0));
  // 6 + 24 + 60 + 20 + 10
  CHECK(cyclic_window_sum(CyclicVector({1, 2, 3, 4, 5}), 3) == doctest::Approx(120.0));
  CHECK(cyclic_window_sum(CyclicVector({1, 1, 1, 1, 1, 1, 1}), 4) == doctest::Approx(7.0));
}

TEST_CASE("cyclic_window_sum rejects out-of-range windows") {
  const CyclicVector x({1, 2, 3, 4, 5});
  CHECK_THROWS_AS(cyclic_window_sum(x, 0), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_window_sum(x, 6), std::invalid_argument);
  CHECK_NOTHROW(cyclic_window_sum(x, 1));
  CHECK_NOTHROW(cyclic_window_sum(x, 5));
}

TEST_CASE("CyclicVector validates its entries") {
  CHECK_THROWS_AS(CyclicVector({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicVector({1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicVector({1, 2, -3}), std::invalid_argument);
  CHECK_THROWS_AS(CyclicVector({1, 2, std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CyclicVector({1, 2, std::numeric_limits<double>::quiet_NaN()}),
                  std::invalid_argument);
}

TEST_CASE("phi matches its expansion and enforces length 5") {
  CHECK(phi(CyclicVector({1, 2, 3, 4, 5})) == doctest::Approx(120.0));
  // 10 + 30 + 24 + 12 + 20
  CHECK(phi(CyclicVector({1, 5, 2, 3, 4})) == doctest::Approx(96.0));
  CHECK_THROWS_AS(phi(CyclicVector({1, 2, 3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(phi(CyclicVector({1, 2, 3, 4, 5, 6})), std::invalid_argument);

  rng::SplitMix64 g{11};
  for (int trial = 0; trial < 50; ++trial) {
    const double t = rng::log_uniform(g, 0.1, 10.0);
    CHECK(rel_close(phi(CyclicVector({t, t, t, t, t})), 5.0 * t * t * t, 1e-12));
  }
}

TEST_CASE("psi matches its expansion and enforces length 7") {
  CHECK(psi(CyclicVector({1, 1, 1, 1, 1, 1, 1})) == doctest::Approx(7.0));
  // frozen from the independent expansion oracle
  CHECK(psi(CyclicVector({1, 2, 1, 2, 1, 2, 1})) == doctest::Approx(24.0));
  CHECK(psi(CyclicVector({1, 2, 1, 2, 1, 2, 1})) ==
        doctest::Approx(oracle::psi_naive({1, 2, 1, 2, 1, 2, 1})));
  CHECK(psi(CyclicVector({2, 2, 2, 2, 2, 2, 2})) == doctest::Approx(112.0));
  CHECK_THROWS_AS(psi(CyclicVector({1, 2, 3, 4, 5})), std::invalid_argument);
}

TEST_CASE("rotation and reflection invariance, homogeneity") {
  rng::SplitMix64 g{2024};
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(g.next() % 7);
    const std::size_t k = 1 + static_cast<std::size_t>(g.next() % n);
    const CyclicVector x = random_cycle(g, n);
    const double base = cyclic_window_sum(x, k);

    const std::size_t shift = static_cast<std::size_t>(g.next() % n);
    CHECK(rel_close(cyclic_window_sum(rotated(x, shift), k), base, 1e-12));
    CHECK(rel_close(cyclic_window_sum(reversed(x), k), base, 1e-12));

    const double t = rng::log_uniform(g, 0.1, 10.0);
    CHECK(rel_close(cyclic_window_sum(scaled(x, t), k),
                    std::pow(t, static_cast<double>(k)) * base, 1e-12));
  }
}

TEST_CASE("phi and psi agree with the naive expansion on random vectors") {
  rng::SplitMix64 g{99};
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<double, 5> x5;
    for (double& v : x5) v = rng::log_uniform(g, 0.1, 10.0);
    CHECK(rel_close(phi(std::span<const double>(x5)), oracle::phi_naive(x5), 1e-12));

    std::array<double, 7> x7;
    for (double& v : x7) v = rng::log_uniform(g, 0.1, 10.0);
    CHECK(rel_close(psi(std::span<const double>(x7)), oracle::psi_naive(x7), 1e-12));
  }
}

TEST_CASE("cyclic_window_sum agrees with the doubled-buffer oracle") {
  rng::SplitMix64 g{4242};
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(g.next() % 9);
    const std::size_t k = 1 + static_cast<std::size_t>(g.next() % n);
    const CyclicVector x = random_cycle(g, n);
    CHECK(rel_close(cyclic_window_sum(x, k), oracle::window_naive(x.span(), k), 1e-12));
  }
}
