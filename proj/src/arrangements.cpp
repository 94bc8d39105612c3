#include "cosineq/arrangements.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cosineq {

namespace {

void check_weights(std::span<const double> w, std::size_t n, const char* who) {
  if (w.size() != n) {
    throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(n) +
                                " weights, got " + std::to_string(w.size()));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
      throw std::invalid_argument(std::string(who) + ": weight " + std::to_string(i + 1) +
                                  " must be strictly positive and finite");
    }
  }
}

void check_sorted(std::span<const double> w, const char* who) {
  if (!std::is_sorted(w.begin(), w.end())) {
    throw std::invalid_argument(std::string(who) + ": weights must be sorted ascending");
  }
}

// The twelve difference identities, in listing order. Orders are 1-based
// here for legibility against the factored formulas; converted on use.
struct IdentityEntry {
  std::array<int, 5> order_a;
  std::array<int, 5> order_b;
  double (*formula)(const std::array<double, 6>&);  // a[1..5], sorted
  const char* text;
};

constexpr std::array<IdentityEntry, 12> kIdentities = {{
    {{1, 2, 3, 4, 5},
     {1, 5, 4, 3, 2},
     [](const std::array<double, 6>& a) { return a[3] * (a[4] - a[2]) * (a[5] - a[1]); },
     "a3*(a4-a2)*(a5-a1)"},
    {{1, 2, 3, 5, 4},
     {1, 4, 5, 3, 2},
     [](const std::array<double, 6>& a) {
       return a[1] * (a[3] - a[2]) * (a[5] - a[4]) + a[3] * (a[4] - a[1]) * (a[5] - a[2]);
     },
     "a1*(a3-a2)*(a5-a4) + a3*(a4-a1)*(a5-a2)"},
    {{1, 2, 4, 3, 5},
     {1, 5, 3, 4, 2},
     [](const std::array<double, 6>& a) {
       return a[1] * (a[3] - a[2]) * (a[5] - a[4]) + a[5] * (a[3] - a[1]) * (a[4] - a[2]);
     },
     "a1*(a3-a2)*(a5-a4) + a5*(a3-a1)*(a4-a2)"},
    {{1, 2, 4, 5, 3},
     {1, 3, 5, 4, 2},
     [](const std::array<double, 6>& a) {
       return a[1] * (a[3] - a[2]) * (a[5] - a[4]) + a[3] * (a[4] - a[1]) * (a[5] - a[2]) +
              a[5] * (a[2] - a[1]) * (a[4] - a[3]);
     },
     "a1*(a3-a2)*(a5-a4) + a3*(a4-a1)*(a5-a2) + a5*(a2-a1)*(a4-a3)"},
    {{1, 2, 5, 3, 4},
     {1, 4, 3, 5, 2},
     [](const std::array<double, 6>& a) { return a[4] * (a[3] - a[1]) * (a[5] - a[2]); },
     "a4*(a3-a1)*(a5-a2)"},
    {{1, 2, 5, 4, 3},
     {1, 3, 4, 5, 2},
     [](const std::array<double, 6>& a) {
       return a[3] * (a[4] - a[1]) * (a[5] - a[2]) + a[5] * (a[2] - a[1]) * (a[4] - a[3]);
     },
     "a3*(a4-a1)*(a5-a2) + a5*(a2-a1)*(a4-a3)"},
    {{1, 3, 2, 4, 5},
     {1, 5, 4, 2, 3},
     [](const std::array<double, 6>& a) {
       return a[1] * (a[3] - a[2]) * (a[5] - a[4]) + a[2] * (a[4] - a[3]) * (a[5] - a[1]);
     },
     "a1*(a3-a2)*(a5-a4) + a2*(a4-a3)*(a5-a1)"},
    {{1, 3, 2, 5, 4},
     {1, 4, 5, 2, 3},
     [](const std::array<double, 6>& a) { return a[2] * (a[4] - a[1]) * (a[5] - a[3]); },
     "a2*(a4-a1)*(a5-a3)"},
    {{1, 3, 4, 2, 5},
     {1, 5, 2, 4, 3},
     [](const std::array<double, 6>& a) { return a[5] * (a[2] - a[1]) * (a[4] - a[3]); },
     "a5*(a2-a1)*(a4-a3)"},
    {{1, 3, 5, 2, 4},
     {1, 4, 2, 5, 3},
     [](const std::array<double, 6>& a) {
       return a[1] * (a[3] - a[2]) * (a[5] - a[4]) + a[4] * (a[2] - a[1]) * (a[5] - a[3]);
     },
     "a1*(a3-a2)*(a5-a4) + a4*(a2-a1)*(a5-a3)"},
    {{1, 4, 2, 3, 5},
     {1, 5, 3, 2, 4},
     [](const std::array<double, 6>& a) { return a[1] * (a[3] - a[2]) * (a[5] - a[4]); },
     "a1*(a3-a2)*(a5-a4)"},
    {{1, 4, 3, 2, 5},
     {1, 5, 2, 3, 4},
     [](const std::array<double, 6>&) { return 0.0; },
     "0"},
}};

}  // namespace

CyclicArrangement arrangement_from_order(std::span<const double> weights,
                                         const std::array<int, 5>& order) {
  check_weights(weights, 5, "arrangement");
  if (order[0] != 0) {
    throw std::invalid_argument("arrangement: first slot must hold weight 1");
  }
  std::array<bool, 5> seen{};
  for (int idx : order) {
    if (idx < 0 || idx > 4 || seen[static_cast<std::size_t>(idx)]) {
      throw std::invalid_argument("arrangement: order is not a permutation of 0..4");
    }
    seen[static_cast<std::size_t>(idx)] = true;
  }
  CyclicArrangement arr{order, {}};
  for (std::size_t i = 0; i < 5; ++i) {
    arr.values[i] = weights[static_cast<std::size_t>(order[i])];
  }
  return arr;
}

std::vector<CyclicArrangement> enumerate_arrangements(std::span<const double> weights) {
  check_weights(weights, 5, "enumerate_arrangements");
  std::vector<CyclicArrangement> out;
  out.reserve(24);
  std::array<int, 4> tail = {1, 2, 3, 4};
  do {
    std::array<int, 5> order = {0, tail[0], tail[1], tail[2], tail[3]};
    out.push_back(arrangement_from_order(weights, order));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

CyclicArrangement sigma0_arrangement(std::span<const double> sorted_weights) {
  check_weights(sorted_weights, 5, "sigma0");
  check_sorted(sorted_weights, "sigma0");
  return arrangement_from_order(sorted_weights, {0, 4, 1, 2, 3});
}

MinPhiResult min_phi_arrangement(std::span<const double> weights) {
  check_weights(weights, 5, "min_phi_arrangement");
  std::array<int, 4> tail = {1, 2, 3, 4};
  MinPhiResult best{};
  bool first = true;
  do {
    std::array<double, 5> vals;
    vals[0] = weights[0];
    for (std::size_t i = 0; i < 4; ++i) {
      vals[i + 1] = weights[static_cast<std::size_t>(tail[i])];
    }
    const double p = phi(std::span<const double>(vals));
    // strict improvement only: the lexicographically first arrangement wins
    // ties, since permutations are visited in lexicographic index order
    if (first || p < best.phi_value) {
      best.arrangement =
          CyclicArrangement{{0, tail[0], tail[1], tail[2], tail[3]}, vals};
      best.phi_value = p;
      first = false;
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return best;
}

std::vector<IdentityResidual> lemma1_identities(std::span<const double> weights) {
  check_weights(weights, 5, "lemma1_identities");

  std::array<double, 6> a{};  // 1-based view of the weights
  for (std::size_t i = 0; i < 5; ++i) a[i + 1] = weights[i];

  const double phi_sigma0 =
      phi(arrangement_from_order(weights, {0, 4, 1, 2, 3}).cyclic());

  std::vector<IdentityResidual> out;
  out.reserve(kIdentities.size());
  for (const IdentityEntry& e : kIdentities) {
    IdentityResidual r;
    for (std::size_t i = 0; i < 5; ++i) {
      r.order_a[i] = e.order_a[i] - 1;
      r.order_b[i] = e.order_b[i] - 1;
    }
    const double phi_a = phi(arrangement_from_order(weights, r.order_a).cyclic());
    const double phi_b = phi(arrangement_from_order(weights, r.order_b).cyclic());
    r.diff_a = phi_a - phi_sigma0;
    r.diff_b = phi_b - phi_sigma0;
    r.formula = e.formula(a);
    r.residual = std::max(std::abs(r.diff_a - r.formula), std::abs(r.diff_b - r.formula));
    r.formula_text = e.text;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<IdentityResidual> lemma1_residuals(std::span<const double> sorted_weights) {
  check_weights(sorted_weights, 5, "lemma1_residuals");
  check_sorted(sorted_weights, "lemma1_residuals");
  return lemma1_identities(sorted_weights);
}

MinPsiResult min_psi_arrangement(std::span<const double> weights) {
  check_weights(weights, 7, "min_psi_arrangement");
  std::array<int, 6> tail = {1, 2, 3, 4, 5, 6};
  MinPsiResult best{};
  bool first = true;
  do {
    std::array<double, 7> vals;
    vals[0] = weights[0];
    for (std::size_t i = 0; i < 6; ++i) {
      vals[i + 1] = weights[static_cast<std::size_t>(tail[i])];
    }
    const double p = psi(std::span<const double>(vals));
    if (first || p < best.psi_value) {
      best.order = {0, tail[0], tail[1], tail[2], tail[3], tail[4], tail[5]};
      best.values = vals;
      best.psi_value = p;
      first = false;
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return best;
}

}  // namespace cosineq
