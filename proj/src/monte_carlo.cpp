#include "cosineq/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "cosineq/rng.hpp"

namespace cosineq {

namespace {

void check_config(const SweepConfig& c) {
  if (c.samples < 1) {
    throw std::invalid_argument("sweep: samples must be at least 1");
  }
  if (!(c.tolerance > 0.0)) {
    throw std::invalid_argument("sweep: tolerance must be positive");
  }
  if (c.threads < 1) {
    throw std::invalid_argument("sweep: threads must be at least 1");
  }
  if (!(c.weight_lo > 0.0) || !(c.weight_hi > c.weight_lo)) {
    throw std::invalid_argument("sweep: weight range must satisfy 0 < lo < hi");
  }
  const bool core = (c.n == 5 || c.n == 7);
  const bool experimental_ok = (c.n >= 9 && c.n % 2 == 1 && c.experimental);
  if (!core && !experimental_ok) {
    throw std::invalid_argument(
        "sweep: n must be 5 or 7; odd n >= 9 needs the experimental flag (got n=" +
        std::to_string(c.n) + ")");
  }
}

SampleRecord run_sample(const SweepConfig& c, std::uint64_t index) {
  rng::SplitMix64 g{rng::mix_stream(c.seed, index)};
  SampleRecord rec;
  rec.index = index;
  rec.weights = rng::log_uniform_weights(g, static_cast<std::size_t>(c.n), c.weight_lo,
                                         c.weight_hi);
  rec.angles = rng::simplex_angles_pi(g, static_cast<std::size_t>(c.n), 1e-9);
  rec.checks = applicable_checks(WeightVector(rec.weights), AngleVector(rec.angles),
                                 c.tolerance, c.experimental);
  rec.min_gap = std::numeric_limits<double>::infinity();
  for (const BoundReport& r : rec.checks) {
    rec.min_gap = std::min(rec.min_gap, r.gap);
  }
  return rec;
}

}  // namespace

std::vector<BoundReport> applicable_checks(const WeightVector& a, const AngleVector& alpha,
                                           double tolerance, bool experimental) {
  std::vector<BoundReport> checks;
  if (a.size() == 5) {
    checks.push_back(pentagonal_bound_check(a, alpha, PentagonalForm::Normal, tolerance));
    checks.push_back(pentagonal_bound_check(a, alpha, PentagonalForm::Strong, tolerance));
  } else if (a.size() == 7) {
    checks.push_back(
        make_bound_report(BoundKind::Heptagonal, cosine_sum(a, alpha), heptagonal_rhs(a),
                          tolerance));
  } else if (experimental) {
    checks.push_back(make_bound_report(BoundKind::OddNExperimental, cosine_sum(a, alpha),
                                       odd_n_rhs_experimental(a), tolerance));
  } else {
    throw std::invalid_argument("bound checks for odd n >= 9 require the experimental flag");
  }
  return checks;
}

SweepSummary monte_carlo_verify(const SweepConfig& config,
                                const std::function<void(const SampleRecord&)>& on_sample) {
  check_config(config);

  SweepSummary summary;
  summary.config = config;
  summary.min_gap = std::numeric_limits<double>::infinity();
  bool have_min = false;

  // Samples are generated in fixed-size chunks: workers fill disjoint slots
  // of the chunk, then the chunk is folded into the summary strictly by
  // sample index. Identical output for any thread count.
  const std::uint64_t chunk_size = 8192;
  std::vector<SampleRecord> chunk;

  for (std::uint64_t chunk_start = 0; chunk_start < config.samples;
       chunk_start += chunk_size) {
    const std::uint64_t count = std::min(chunk_size, config.samples - chunk_start);
    chunk.assign(static_cast<std::size_t>(count), SampleRecord{});

    const int workers =
        static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(config.threads),
                                                 count));
    if (workers <= 1) {
      for (std::uint64_t i = 0; i < count; ++i) {
        chunk[static_cast<std::size_t>(i)] = run_sample(config, chunk_start + i);
      }
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::uint64_t i = static_cast<std::uint64_t>(w); i < count;
               i += static_cast<std::uint64_t>(workers)) {
            chunk[static_cast<std::size_t>(i)] = run_sample(config, chunk_start + i);
          }
        });
      }
      for (std::thread& t : pool) t.join();
    }

    for (const SampleRecord& rec : chunk) {
      for (const BoundReport& r : rec.checks) {
        if (!r.holds) ++summary.violations;
        if (!have_min || r.gap < summary.min_gap) {
          have_min = true;
          summary.min_gap = r.gap;
          summary.argmin_index = rec.index;
          summary.argmin_kind = r.kind;
          summary.argmin_weights = rec.weights;
          summary.argmin_angles = rec.angles;
        }
      }
      if (on_sample) on_sample(rec);
    }
  }
  return summary;
}

}  // namespace cosineq
