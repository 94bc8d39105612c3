#include "cosineq/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cosineq/numeric.hpp"
#include "cosineq/rng.hpp"

namespace cosineq {

namespace {

constexpr double kLambdaEps = 1e-15;          // lower end of the multiplier bracket
constexpr double kRootResidualMax = 1e-13;    // acceptance on |angle sum - pi|
constexpr double kGradAngleFloor = 1e-9;      // positivity floor for iterates
constexpr int kGradStarts = 16;               // random starts beside the barycenter
constexpr int kGradMaxIters = 10000;
constexpr std::uint64_t kGradStartSeed = 0x5eed5eed5eedull;  // fixed: reports are deterministic

double branch_angle(double weight, double lambda, bool obtuse) {
  const double ratio = std::min(lambda / weight, 1.0);
  const double acute = std::asin(ratio);
  return obtuse ? kPi - acute : acute;
}

double angle_sum(std::span<const double> a, double lambda, int obtuse_idx) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += branch_angle(a[i], lambda, static_cast<int>(i) == obtuse_idx);
  }
  return sum;
}

// d/dlambda of angle_sum; +1/sqrt(a^2-l^2) per acute term, negated obtuse.
double angle_sum_deriv(std::span<const double> a, double lambda, int obtuse_idx) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double disc = a[i] * a[i] - lambda * lambda;
    if (disc <= 0.0) return std::numeric_limits<double>::infinity();
    const double term = 1.0 / std::sqrt(disc);
    sum += (static_cast<int>(i) == obtuse_idx) ? -term : term;
  }
  return sum;
}

// Bisection on [lo, hi] with a sign change of g(lambda) = angle_sum - pi,
// then a short Newton polish. Returns the refined lambda.
double refine_root(std::span<const double> a, int obtuse_idx, double lo, double hi,
                   double g_lo) {
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-17 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = angle_sum(a, mid, obtuse_idx) - kPi;
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  double lambda = 0.5 * (lo + hi);
  for (int step = 0; step < 4; ++step) {
    const double g = angle_sum(a, lambda, obtuse_idx) - kPi;
    const double d = angle_sum_deriv(a, lambda, obtuse_idx);
    if (!std::isfinite(d) || d == 0.0) break;
    const double next = lambda - g / d;
    if (!(next > lo) || !(next < hi)) break;
    lambda = next;
  }
  return lambda;
}

std::optional<StationaryPoint> point_from_lambda(const WeightVector& a, double lambda,
                                                 int obtuse_idx) {
  const std::size_t n = a.size();
  std::vector<double> alpha(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    alpha[i] = branch_angle(a[i], lambda, static_cast<int>(i) == obtuse_idx);
    if (alpha[i] < AngleVector::kMinAngle) return std::nullopt;
    sum += alpha[i];
  }
  const double sum_residual = std::abs(sum - kPi);
  if (sum_residual > kRootResidualMax) return std::nullopt;

  double value = 0.0;
  double stat_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    value += a[i] * std::cos(alpha[i]);
    stat_residual = std::max(stat_residual, std::abs(a[i] * std::sin(alpha[i]) - lambda));
  }
  std::vector<int> obtuse;
  if (obtuse_idx >= 0) obtuse.push_back(obtuse_idx);
  return StationaryPoint{AngleVector(std::move(alpha)), lambda, value, std::move(obtuse),
                         sum_residual, stat_residual};
}

}  // namespace

std::optional<StationaryPoint> solve_stationary(const WeightVector& a,
                                                std::span<const int> obtuse_mask) {
  if (obtuse_mask.size() > 1) {
    throw std::invalid_argument(
        "solve_stationary: at most one obtuse index (two obtuse angles exceed pi)");
  }
  int obtuse_idx = -1;
  if (obtuse_mask.size() == 1) {
    obtuse_idx = obtuse_mask[0];
    if (obtuse_idx < 0 || static_cast<std::size_t>(obtuse_idx) >= a.size()) {
      throw std::invalid_argument("solve_stationary: obtuse index out of range");
    }
  }

  const std::span<const double> w = a.span();
  const double lambda_max = *std::min_element(w.begin(), w.end());

  std::vector<double> roots;
  if (obtuse_idx < 0) {
    // All-acute angle sum is strictly increasing in lambda from ~0; a root
    // exists iff the sum reaches pi at the bracket's right end.
    const double g_lo = angle_sum(w, kLambdaEps, obtuse_idx) - kPi;
    const double g_hi = angle_sum(w, lambda_max, obtuse_idx) - kPi;
    if (g_hi >= 0.0 && g_lo < 0.0) {
      roots.push_back(refine_root(w, obtuse_idx, kLambdaEps, lambda_max, g_lo));
    }
  } else {
    // With an obtuse term the sum starts at pi (lambda -> 0) and need not be
    // monotone: scan for every sign change, excluding the degenerate
    // lambda = 0 endpoint.
    constexpr int kScanPoints = 2048;
    double prev_lambda = lambda_max / kScanPoints;
    double prev_g = angle_sum(w, prev_lambda, obtuse_idx) - kPi;
    for (int m = 2; m <= kScanPoints; ++m) {
      const double cur_lambda = lambda_max * m / kScanPoints;
      const double cur_g = angle_sum(w, cur_lambda, obtuse_idx) - kPi;
      if ((prev_g <= 0.0 && cur_g >= 0.0) || (prev_g >= 0.0 && cur_g <= 0.0)) {
        if (prev_g != 0.0 || cur_g != 0.0) {
          roots.push_back(refine_root(w, obtuse_idx, prev_lambda, cur_lambda, prev_g));
        }
      }
      prev_lambda = cur_lambda;
      prev_g = cur_g;
    }
  }

  std::optional<StationaryPoint> best;
  for (double lambda : roots) {
    auto candidate = point_from_lambda(a, lambda, obtuse_idx);
    if (candidate && (!best || candidate->value > best->value)) {
      best = std::move(candidate);
    }
  }
  return best;
}

std::string_view to_string(SharpnessMethod method) noexcept {
  switch (method) {
    case SharpnessMethod::LambdaBisection: return "lambda-bisection";
    case SharpnessMethod::GradientAscent: return "gradient-ascent";
    case SharpnessMethod::BothAgree: return "both-agree";
  }
  return "unknown";
}

namespace {

struct GradOutcome {
  std::vector<double> alpha;
  double value = -std::numeric_limits<double>::infinity();
  double proj_grad_norm = std::numeric_limits<double>::infinity();
  bool converged = false;
};

double eval_cosine(std::span<const double> a, std::span<const double> alpha) {
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * std::cos(alpha[i]);
  return v;
}

// Clamp to the positivity floor and rescale back onto the sum = pi plane.
void project_to_simplex(std::vector<double>& alpha) {
  double sum = 0.0;
  for (double& v : alpha) {
    v = std::max(v, kGradAngleFloor);
    sum += v;
  }
  const double scale = kPi / sum;
  for (double& v : alpha) v *= scale;
}

double projected_gradient(std::span<const double> a, std::span<const double> alpha,
                          std::vector<double>& d) {
  const std::size_t n = a.size();
  d.resize(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = -a[i] * std::sin(alpha[i]);
    mean += d[i];
  }
  mean /= static_cast<double>(n);
  double norm_sq = 0.0;
  for (double& v : d) {
    v -= mean;
    norm_sq += v * v;
  }
  return std::sqrt(norm_sq);
}

GradOutcome ascend_from(std::span<const double> a, std::vector<double> alpha, double scale) {
  project_to_simplex(alpha);
  const double stop_norm = 1e-10 * scale;
  double value = eval_cosine(a, alpha);
  double step = 0.1;
  std::vector<double> d, candidate;
  double norm = std::numeric_limits<double>::infinity();
  bool plateau = false;

  for (int iter = 0; iter < kGradMaxIters; ++iter) {
    norm = projected_gradient(a, alpha, d);
    if (norm <= stop_norm) break;
    bool accepted = false;
    while (step >= 1e-18) {
      candidate = alpha;
      for (std::size_t i = 0; i < candidate.size(); ++i) candidate[i] += step * d[i];
      project_to_simplex(candidate);
      const double cand_value = eval_cosine(a, candidate);
      if (cand_value > value) {
        alpha.swap(candidate);
        value = cand_value;
        step *= 1.3;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // improvements fell below one ulp of the value: a plateau, reached
      // either at an interior maximum or at a clamped boundary supremum
      // where the gradient norm cannot vanish
      plateau = true;
      break;
    }
  }

  norm = projected_gradient(a, alpha, d);
  GradOutcome out;
  out.alpha = std::move(alpha);
  out.value = value;
  out.proj_grad_norm = norm;
  out.converged = norm <= 1e-8 * scale || (plateau && norm <= 1e-4 * scale);
  return out;
}

GradOutcome gradient_ascent_multistart(const WeightVector& a) {
  const std::size_t n = a.size();
  const double scale =
      std::max(1.0, *std::max_element(a.span().begin(), a.span().end()));

  GradOutcome best;
  auto consider = [&](std::vector<double> alpha) {
    GradOutcome got = ascend_from(a.span(), std::move(alpha), scale);
    if (got.value > best.value ||
        (got.converged && !best.converged && got.value >= best.value)) {
      best = std::move(got);
    }
  };

  // barycenter start
  consider(std::vector<double>(n, kPi / static_cast<double>(n)));

  // vertex starts: when no interior stationary point exists the supremum
  // sits at a corner of the simplex, which plain ascent only approaches
  // geometrically; starting there costs nothing and plateaus immediately
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> alpha(n, kGradAngleFloor);
    alpha[j] = kPi - static_cast<double>(n - 1) * kGradAngleFloor;
    consider(std::move(alpha));
  }

  // seeded random starts; fixed seed keeps reports reproducible
  for (int s = 0; s < kGradStarts; ++s) {
    rng::SplitMix64 g{rng::mix_stream(kGradStartSeed, static_cast<std::uint64_t>(s))};
    consider(rng::simplex_angles_pi(g, n, 1e-6));
  }
  return best;
}

}  // namespace

SharpnessReport max_cosine_sum(const WeightVector& a, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("max_cosine_sum: tolerance must be positive");
  }
  const std::size_t n = a.size();
  if (n != 5 && n != 7) {
    throw std::invalid_argument("max_cosine_sum: supports 5 or 7 weights, got " +
                                std::to_string(n));
  }

  double rhs_strong, rhs_normal;
  if (n == 5) {
    std::vector<double> sorted(a.values());
    std::sort(sorted.begin(), sorted.end());
    rhs_strong = pentagonal_rhs_strong(WeightVector(std::move(sorted)));
    rhs_normal = pentagonal_rhs_normal(a);
  } else {
    rhs_strong = rhs_normal = heptagonal_rhs(a);
  }

  std::optional<StationaryPoint> best_stationary;
  for (int mask = -1; mask < static_cast<int>(n); ++mask) {
    std::vector<int> indices;
    if (mask >= 0) indices.push_back(mask);
    auto candidate = solve_stationary(a, indices);
    if (candidate && (!best_stationary || candidate->value > best_stationary->value)) {
      best_stationary = std::move(candidate);
    }
  }

  GradOutcome grad = gradient_ascent_multistart(a);

  if (!best_stationary && !grad.converged) {
    std::ostringstream msg;
    msg << "max_cosine_sum: no stationary point for any branch mask and gradient ascent "
           "did not converge (best value "
        << grad.value << ", projected gradient norm " << grad.proj_grad_norm << ")";
    throw ConvergenceError(msg.str());
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double stat_value = best_stationary ? best_stationary->value : nan;
  const double grad_value = grad.converged || std::isfinite(grad.value) ? grad.value : nan;

  bool agree = true;
  SharpnessMethod method;
  double max_value;
  std::vector<double> maximizer;
  if (best_stationary && !std::isnan(grad_value)) {
    agree = std::abs(stat_value - grad_value) <=
            10.0 * tol * std::max({1.0, std::abs(stat_value), std::abs(grad_value)});
    if (stat_value >= grad_value) {
      max_value = stat_value;
      maximizer = best_stationary->alpha.values();
      method = agree ? SharpnessMethod::BothAgree : SharpnessMethod::LambdaBisection;
    } else {
      max_value = grad_value;
      maximizer = grad.alpha;
      method = agree ? SharpnessMethod::BothAgree : SharpnessMethod::GradientAscent;
    }
  } else if (best_stationary) {
    max_value = stat_value;
    maximizer = best_stationary->alpha.values();
    method = SharpnessMethod::LambdaBisection;
  } else {
    max_value = grad_value;
    maximizer = grad.alpha;
    method = SharpnessMethod::GradientAscent;
  }

  return SharpnessReport{max_value,
                         AngleVector(std::move(maximizer)),
                         rhs_strong - max_value,
                         rhs_normal - max_value,
                         rel_close(max_value, rhs_strong, 1e-7),
                         method,
                         agree,
                         stat_value,
                         grad_value,
                         best_stationary ? best_stationary->lambda : nan};
}

}  // namespace cosineq
