#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "cosineq/cyclic_forms.hpp"

namespace cosineq {

// Circular permutation of five weights with slot 0 pinned to the first
// weight. `order` is a permutation of {0..4} with order[0] == 0; `values`
// carries the weights in that order.
struct CyclicArrangement {
  std::array<int, 5> order;
  std::array<double, 5> values;

  CyclicVector cyclic() const { return CyclicVector({values.begin(), values.end()}); }
};

// All 24 pinned arrangements, in lexicographic order of the index sequence.
std::vector<CyclicArrangement> enumerate_arrangements(std::span<const double> weights);

CyclicArrangement arrangement_from_order(std::span<const double> weights,
                                         const std::array<int, 5>& order);

// For sorted weights a1 <= ... <= a5: the arrangement (a1, a5, a2, a3, a4),
// which attains the minimum of phi over all 24 arrangements. Its reflection
// (a1, a4, a3, a2, a5) ties.
CyclicArrangement sigma0_arrangement(std::span<const double> sorted_weights);

struct MinPhiResult {
  CyclicArrangement arrangement;
  double phi_value;
};

// Exhaustive minimum of phi over the 24 arrangements; ties resolved toward
// the lexicographically smallest index sequence.
MinPhiResult min_phi_arrangement(std::span<const double> weights);

// One factored difference identity: a reflection pair of arrangements whose
// phi exceeds phi(sigma0) by the same closed-form product expression.
// Orders are 0-based; formula_text uses 1-based weight names.
struct IdentityResidual {
  std::array<int, 5> order_a;
  std::array<int, 5> order_b;
  double diff_a;      // phi(order_a) - phi(sigma0), computed directly
  double diff_b;      // phi(order_b) - phi(sigma0), computed directly
  double formula;     // the factored expression, evaluated directly
  double residual;    // max over the pair of |diff - formula|
  std::string formula_text;
};

// The twelve difference identities evaluated on arbitrary positive weights.
// They hold as algebraic identities regardless of order; only the
// nonnegativity of the factored formulas needs sorted input.
std::vector<IdentityResidual> lemma1_identities(std::span<const double> weights);

// Same table, but gated on sorted input (ascending), where every formula is
// additionally nonnegative. The final entry is the sigma1/sigma0 pair whose
// difference is identically zero.
std::vector<IdentityResidual> lemma1_residuals(std::span<const double> sorted_weights);

// n=7 utility: exhaustive psi minimization over the 720 pinned arrangements.
// Unlike the pentagonal case there is no known closed-form minimizer; this is
// search only.
struct MinPsiResult {
  std::array<int, 7> order;
  std::array<double, 7> values;
  double psi_value;
};

MinPsiResult min_psi_arrangement(std::span<const double> weights);

}  // namespace cosineq
