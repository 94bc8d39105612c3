#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cosineq/arrangements.hpp"
#include "cosineq/cyclic_forms.hpp"

namespace cosineq {

// Strictly positive, finite weights (n >= 3; the pentagonal/heptagonal
// operations additionally pin the length they need).
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }
  const std::vector<double>& values() const noexcept { return weights_; }
  std::span<const double> span() const noexcept { return weights_; }
  bool sorted_ascending() const noexcept;

 private:
  std::vector<double> weights_;
};

// Positive angles in radians summing to pi. Each angle must be at least
// kMinAngle and the sum must match pi within kAngleSumTol (absolute).
class AngleVector {
 public:
  static constexpr double kMinAngle = 1e-12;
  static constexpr double kAngleSumTol = 1e-12;

  explicit AngleVector(std::vector<double> angles);

  std::size_t size() const noexcept { return angles_.size(); }
  double operator[](std::size_t i) const noexcept { return angles_[i]; }
  const std::vector<double>& values() const noexcept { return angles_; }
  std::span<const double> span() const noexcept { return angles_; }

 private:
  std::vector<double> angles_;
};

enum class BoundKind {
  Toth,
  PentagonalNormal,
  PentagonalStrong,
  Lemma2Arrangement,
  Heptagonal,
  OddNExperimental,
};

std::string_view to_string(BoundKind kind) noexcept;

struct BoundReport {
  BoundKind kind;
  double lhs;
  double rhs;
  double gap;  // rhs - lhs
  double tolerance;
  bool holds;  // gap >= -tolerance
};

BoundReport make_bound_report(BoundKind kind, double lhs, double rhs, double tolerance);

// sum_i a_i cos(alpha_i); may be negative.
double cosine_sum(const WeightVector& a, const AngleVector& alpha);

// sum_i x_i x_{i+1} cos(alpha_i), cyclic in x.
double toth_lhs(const CyclicVector& x, const AngleVector& alpha);

// cos(pi/n) * sum_i x_i^2, the polygon-inequality right side.
double toth_rhs(const CyclicVector& x);

// cos(pi/5) * phi(a^2) / (a1...a5) with the weights in their given order.
double pentagonal_rhs_normal(const WeightVector& a);

// cos(pi/5) * phi(a1^2, a5^2, a2^2, a3^2, a4^2) / (a1...a5) for sorted
// weights: the sharpest of the 24 arrangement bounds.
double pentagonal_rhs_strong(const WeightVector& sorted_a);

// cos(pi/5) * phi(b^2) / (b1...b5) for an arbitrary arrangement b. The
// normal form is the identity arrangement; the strong form is sigma0.
double lemma2_rhs(const CyclicArrangement& b);

// cos(pi/7) * psi(a^2) / (a1...a7).
double heptagonal_rhs(const WeightVector& a);

// cos(pi/n) * window_{(n+1)/2}(a^2) / prod(a) for odd n >= 9. The n=5 and
// n=7 bounds follow this pattern; for n >= 9 it is an unproven
// extrapolation and every report carrying it is tagged experimental.
double odd_n_rhs_experimental(const WeightVector& a);

// Result of a cosine-pairing substitution: the constructed cycle x, the
// permutation sending beta slot i to its source alpha index, and the weight
// product P. The construction identities are re-evaluated numerically and
// their residuals stored (all should sit at rounding level, ~1e-16).
struct SubstitutionResult {
  CyclicVector x;
  std::vector<int> beta_index;       // beta_index[i] = source alpha slot, 0-based
  double product_p;
  double sum_identity_residual;      // scaled residual of sum x_i^2 * P = form(a^2)
  double pairing_residual;           // worst scaled term-wise residual of the cosine pairing
  double product_identity_residual;  // scaled residual of prod x_i^2 = P
};

// Pentagonal substitution for an arrangement b: x_i = sqrt of a triple/pair
// quotient of the b's, beta = (alpha1, alpha4, alpha2, alpha5, alpha3).
SubstitutionResult lemma2_substitution(const CyclicArrangement& b, const AngleVector& alpha);

// Heptagonal substitution: quadruple/triple quotients, beta =
// (alpha1, alpha5, alpha2, alpha6, alpha3, alpha7, alpha4).
SubstitutionResult heptagonal_substitution(const WeightVector& a, const AngleVector& alpha);

enum class PentagonalForm { Normal, Strong };

// Evaluates one pentagonal bound. The strong form sorts weight/angle pairs
// jointly by weight first (the left side is invariant under the re-pairing).
BoundReport pentagonal_bound_check(const WeightVector& a, const AngleVector& alpha,
                                   PentagonalForm form, double tolerance);

// The n=5 polygon inequality derived through the pentagonal bound: builds
// the paired weights a_i = x_i x_{i+1} in the derivation's order, evaluates
// the pentagonal right side of those weights, and independently
// cos(pi/5) * sum x_i^2. The two right sides agree identically.
struct TothDerivation {
  double lhs;                 // sum x_i x_{i+1} cos(alpha_i)
  double rhs_via_pentagonal;  // pentagonal normal rhs of the constructed weights
  double rhs_direct;          // cos(pi/5) * sum x_i^2
  double pairing_residual;    // worst term-wise residual of the cosine re-pairing
  double sum_identity_residual;
};

TothDerivation toth_from_pentagonal(const CyclicVector& x, const AngleVector& alpha);

}  // namespace cosineq
