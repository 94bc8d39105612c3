#include "cosineq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cosineq/numeric.hpp"

namespace cosineq {

namespace {

void require_length(std::size_t got, std::size_t want, const char* who) {
  if (got != want) {
    throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(want) +
                                " entries, got " + std::to_string(got));
  }
}

double product(std::span<const double> v) {
  double p = 1.0;
  for (double x : v) p *= x;
  return p;
}

std::vector<double> squares(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x *= x;
  return out;
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 3) {
    throw std::invalid_argument("weights: need at least 3 entries, got " +
                                std::to_string(weights_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw std::invalid_argument("weights: entry " + std::to_string(i + 1) +
                                  " must be strictly positive and finite");
    }
  }
}

bool WeightVector::sorted_ascending() const noexcept {
  return std::is_sorted(weights_.begin(), weights_.end());
}

AngleVector::AngleVector(std::vector<double> angles) : angles_(std::move(angles)) {
  if (angles_.size() < 3) {
    throw std::invalid_argument("angles: need at least 3 entries, got " +
                                std::to_string(angles_.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (!std::isfinite(angles_[i]) || angles_[i] < kMinAngle) {
      throw std::invalid_argument("angles: entry " + std::to_string(i + 1) +
                                  " must be finite and at least 1e-12");
    }
    sum += angles_[i];
  }
  if (std::abs(sum - kPi) > kAngleSumTol) {
    throw std::invalid_argument("angles: sum must equal pi within 1e-12, off by " +
                                std::to_string(sum - kPi));
  }
}

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::Toth: return "toth";
    case BoundKind::PentagonalNormal: return "pentagonal-normal";
    case BoundKind::PentagonalStrong: return "pentagonal-strong";
    case BoundKind::Lemma2Arrangement: return "lemma2-arrangement";
    case BoundKind::Heptagonal: return "heptagonal";
    case BoundKind::OddNExperimental: return "odd-n-experimental";
  }
  return "unknown";
}

BoundReport make_bound_report(BoundKind kind, double lhs, double rhs, double tolerance) {
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("bound report: tolerance must be positive");
  }
  const double gap = rhs - lhs;
  return BoundReport{kind, lhs, rhs, gap, tolerance, gap >= -tolerance};
}

double cosine_sum(const WeightVector& a, const AngleVector& alpha) {
  require_length(alpha.size(), a.size(), "cosine_sum: angles");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * std::cos(alpha[i]);
  }
  return sum;
}

double toth_lhs(const CyclicVector& x, const AngleVector& alpha) {
  const std::size_t n = x.size();
  require_length(alpha.size(), n, "toth_lhs: angles");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += x[i] * x[(i + 1) % n] * std::cos(alpha[i]);
  }
  return sum;
}

double toth_rhs(const CyclicVector& x) {
  const std::size_t n = x.size();
  double sumsq = 0.0;
  for (std::size_t i = 0; i < n; ++i) sumsq += x[i] * x[i];
  return std::cos(kPi / static_cast<double>(n)) * sumsq;
}

double pentagonal_rhs_normal(const WeightVector& a) {
  require_length(a.size(), 5, "pentagonal_rhs_normal");
  return kCosPi5 * phi(std::span<const double>(squares(a.span()))) / product(a.span());
}

double pentagonal_rhs_strong(const WeightVector& sorted_a) {
  require_length(sorted_a.size(), 5, "pentagonal_rhs_strong");
  if (!sorted_a.sorted_ascending()) {
    throw std::invalid_argument("pentagonal_rhs_strong: weights must be sorted ascending");
  }
  return lemma2_rhs(sigma0_arrangement(sorted_a.span()));
}

double lemma2_rhs(const CyclicArrangement& b) {
  const std::span<const double> vals(b.values);
  return kCosPi5 * phi(std::span<const double>(squares(vals))) / product(vals);
}

double heptagonal_rhs(const WeightVector& a) {
  require_length(a.size(), 7, "heptagonal_rhs");
  return std::cos(kPi / 7.0) * psi(std::span<const double>(squares(a.span()))) /
         product(a.span());
}

double odd_n_rhs_experimental(const WeightVector& a) {
  const std::size_t n = a.size();
  if (n < 9 || n % 2 == 0) {
    throw std::invalid_argument("odd_n_rhs_experimental: n must be odd and at least 9, got " +
                                std::to_string(n));
  }
  const std::size_t window = (n + 1) / 2;
  return std::cos(kPi / static_cast<double>(n)) *
         cyclic_window_sum(std::span<const double>(squares(a.span())), window) /
         product(a.span());
}

namespace {

// Shared tail of both substitutions: given the constructed x, the beta
// permutation, and the source weights, re-evaluate the construction
// identities and fill in the residual fields.
SubstitutionResult finish_substitution(std::vector<double> x_vals, std::vector<int> beta_index,
                                       std::span<const double> source_weights,
                                       const AngleVector& alpha, double form_of_squares) {
  const std::size_t n = x_vals.size();
  const double p = product(source_weights);

  double sumsq = 0.0;
  double prodsq = 1.0;
  for (double v : x_vals) {
    sumsq += v * v;
    prodsq *= v * v;
  }

  double pairing = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = static_cast<std::size_t>(beta_index[i]);
    const double lhs_term = x_vals[i] * x_vals[(i + 1) % n] * std::cos(alpha[src]);
    const double rhs_term = source_weights[src] * std::cos(alpha[src]);
    pairing = std::max(pairing, rel_residual(lhs_term, rhs_term));
  }

  SubstitutionResult out{CyclicVector(std::move(x_vals)), std::move(beta_index), p,
                         rel_residual(sumsq * p, form_of_squares), pairing,
                         rel_residual(prodsq, p)};
  return out;
}

}  // namespace

SubstitutionResult lemma2_substitution(const CyclicArrangement& b, const AngleVector& alpha) {
  require_length(alpha.size(), 5, "lemma2_substitution: angles");
  const std::array<double, 5>& v = b.values;

  std::vector<double> x(5);
  x[0] = std::sqrt(v[0] * v[1] * v[2] / (v[3] * v[4]));
  x[1] = std::sqrt(v[0] * v[3] * v[4] / (v[1] * v[2]));
  x[2] = std::sqrt(v[1] * v[2] * v[3] / (v[0] * v[4]));
  x[3] = std::sqrt(v[0] * v[1] * v[4] / (v[2] * v[3]));
  x[4] = std::sqrt(v[2] * v[3] * v[4] / (v[0] * v[1]));

  // beta_i = alpha at these slots; pairs x_i x_{i+1} with b_1, b_4, b_2, b_5, b_3
  std::vector<int> beta_index = {0, 3, 1, 4, 2};

  const double form = phi(std::span<const double>(squares(std::span<const double>(v))));
  return finish_substitution(std::move(x), std::move(beta_index), v, alpha, form);
}

SubstitutionResult heptagonal_substitution(const WeightVector& a, const AngleVector& alpha) {
  require_length(a.size(), 7, "heptagonal_substitution");
  require_length(alpha.size(), 7, "heptagonal_substitution: angles");
  const std::span<const double> v = a.span();

  std::vector<double> x(7);
  x[0] = std::sqrt(v[0] * v[1] * v[2] * v[3] / (v[4] * v[5] * v[6]));
  x[1] = std::sqrt(v[0] * v[4] * v[5] * v[6] / (v[1] * v[2] * v[3]));
  x[2] = std::sqrt(v[1] * v[2] * v[3] * v[4] / (v[0] * v[5] * v[6]));
  x[3] = std::sqrt(v[0] * v[1] * v[5] * v[6] / (v[2] * v[3] * v[4]));
  x[4] = std::sqrt(v[2] * v[3] * v[4] * v[5] / (v[0] * v[1] * v[6]));
  x[5] = std::sqrt(v[0] * v[1] * v[2] * v[6] / (v[3] * v[4] * v[5]));
  x[6] = std::sqrt(v[3] * v[4] * v[5] * v[6] / (v[0] * v[1] * v[2]));

  // pairs x_i x_{i+1} with a_1, a_5, a_2, a_6, a_3, a_7, a_4
  std::vector<int> beta_index = {0, 4, 1, 5, 2, 6, 3};

  const double form = psi(std::span<const double>(squares(v)));
  return finish_substitution(std::move(x), std::move(beta_index), v, alpha, form);
}

BoundReport pentagonal_bound_check(const WeightVector& a, const AngleVector& alpha,
                                   PentagonalForm form, double tolerance) {
  require_length(a.size(), 5, "pentagonal_bound_check");
  require_length(alpha.size(), 5, "pentagonal_bound_check: angles");

  if (form == PentagonalForm::Normal) {
    return make_bound_report(BoundKind::PentagonalNormal, cosine_sum(a, alpha),
                             pentagonal_rhs_normal(a), tolerance);
  }

  // Strong form: sort weight/angle pairs jointly by weight. The left side is
  // unchanged by the re-pairing; the right side needs sorted weights.
  std::vector<std::size_t> idx(5);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return a[i] < a[j]; });
  std::vector<double> w(5), ang(5);
  for (std::size_t i = 0; i < 5; ++i) {
    w[i] = a[idx[i]];
    ang[i] = alpha[idx[i]];
  }
  const WeightVector sorted_w{std::move(w)};
  const AngleVector paired_ang{std::move(ang)};
  return make_bound_report(BoundKind::PentagonalStrong, cosine_sum(sorted_w, paired_ang),
                           pentagonal_rhs_strong(sorted_w), tolerance);
}

TothDerivation toth_from_pentagonal(const CyclicVector& x, const AngleVector& alpha) {
  require_length(x.size(), 5, "toth_from_pentagonal");
  require_length(alpha.size(), 5, "toth_from_pentagonal: angles");

  // Paired weights in derivation order, and the beta slots they pair with:
  //   a = (x1x2, x3x4, x5x1, x2x3, x4x5), beta = (alpha1, alpha3, alpha5, alpha2, alpha4)
  const std::array<double, 5> a = {x[0] * x[1], x[2] * x[3], x[4] * x[0], x[1] * x[2],
                                   x[3] * x[4]};
  const std::array<int, 5> beta_index = {0, 2, 4, 1, 3};

  double lhs = 0.0;  // sum x_i x_{i+1} cos(alpha_i)
  for (std::size_t i = 0; i < 5; ++i) {
    lhs += x[i] * x[(i + 1) % 5] * std::cos(alpha[i]);
  }

  // Term-wise re-pairing: a_i cos(beta_i) reproduces x_j x_{j+1} cos(alpha_j).
  double pairing = 0.0;
  double lhs_paired = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t src = static_cast<std::size_t>(beta_index[i]);
    const double term = a[i] * std::cos(alpha[src]);
    const double direct = x[src] * x[(src + 1) % 5] * std::cos(alpha[src]);
    pairing = std::max(pairing, rel_residual(term, direct));
    lhs_paired += term;
  }
  (void)lhs_paired;

  const double p = product(std::span<const double>(a));
  const double phi_sq = phi(std::span<const double>(squares(std::span<const double>(a))));
  const double rhs_via = kCosPi5 * phi_sq / p;

  double sumsq = 0.0;
  for (std::size_t i = 0; i < 5; ++i) sumsq += x[i] * x[i];
  const double rhs_direct = kCosPi5 * sumsq;

  return TothDerivation{lhs, rhs_via, rhs_direct, pairing,
                        rel_residual(sumsq * p, phi_sq)};
}

}  // namespace cosineq
