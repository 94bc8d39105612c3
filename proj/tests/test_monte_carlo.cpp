#include "cosineq/monte_carlo.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "cosineq/report_io.hpp"

using namespace cosineq;

TEST_CASE("monte_carlo_verify validates its configuration") {
  SweepConfig bad;
  bad.samples = 0;
  CHECK_THROWS_AS(monte_carlo_verify(bad), std::invalid_argument);

  SweepConfig wrong_n;
  wrong_n.n = 6;
  CHECK_THROWS_AS(monte_carlo_verify(wrong_n), std::invalid_argument);

  SweepConfig gated;
  gated.n = 9;
  gated.samples = 10;
  CHECK_THROWS_AS(monte_carlo_verify(gated), std::invalid_argument);
  gated.experimental = true;
  CHECK_NOTHROW(monte_carlo_verify(gated));
}

TEST_CASE("sweeps find no violations for the proven bounds") {
  SweepConfig five;
  five.n = 5;
  five.samples = 20000;
  five.seed = 42;
  const SweepSummary s5 = monte_carlo_verify(five);
  CHECK(s5.violations == 0);
  CHECK(s5.min_gap > 0.0);
  CHECK(s5.argmin_weights.size() == 5);

  SweepConfig seven;
  seven.n = 7;
  seven.samples = 5000;
  seven.seed = 42;
  const SweepSummary s7 = monte_carlo_verify(seven);
  CHECK(s7.violations == 0);
  CHECK(s7.argmin_kind == BoundKind::Heptagonal);
}

TEST_CASE("the experimental n=9 sweep runs and is tagged") {
  SweepConfig nine;
  nine.n = 9;
  nine.samples = 2000;
  nine.seed = 3;
  nine.experimental = true;
  const SweepSummary s = monte_carlo_verify(nine);
  CHECK(s.violations == 0);
  CHECK(s.argmin_kind == BoundKind::OddNExperimental);
  const std::string dump = sweep_summary_json(s).dump();
  CHECK(dump.find("\"experimental\":true") != std::string::npos);
}

TEST_CASE("same seed gives byte-identical summaries and records") {
  SweepConfig config;
  config.n = 5;
  config.samples = 3000;
  config.seed = 12345;

  std::vector<std::string> records_a, records_b;
  const SweepSummary a = monte_carlo_verify(config, [&](const SampleRecord& r) {
    records_a.push_back(sample_record_json(r, config).dump());
  });
  const SweepSummary b = monte_carlo_verify(config, [&](const SampleRecord& r) {
    records_b.push_back(sample_record_json(r, config).dump());
  });

  CHECK(sweep_summary_json(a).dump() == sweep_summary_json(b).dump());
  REQUIRE(records_a.size() == records_b.size());
  CHECK(records_a == records_b);

  // a different seed gives a different stream
  config.seed = 54321;
  const SweepSummary c = monte_carlo_verify(config);
  CHECK(sweep_summary_json(a).dump() != sweep_summary_json(c).dump());
}

TEST_CASE("results are independent of the thread count") {
  SweepConfig config;
  config.n = 5;
  config.samples = 10000;
  config.seed = 777;
  config.threads = 1;

  std::vector<std::string> records_1, records_4;
  const SweepSummary one = monte_carlo_verify(config, [&](const SampleRecord& r) {
    records_1.push_back(sample_record_json(r, config).dump());
  });
  config.threads = 4;
  const SweepSummary four = monte_carlo_verify(config, [&](const SampleRecord& r) {
    records_4.push_back(sample_record_json(r, config).dump());
  });

  CHECK(sweep_summary_json(one).dump() == sweep_summary_json(four).dump());
  CHECK(records_1 == records_4);
}

TEST_CASE("sample records replay standalone") {
  SweepConfig config;
  config.n = 5;
  config.samples = 50;
  config.seed = 99;

  std::vector<SampleRecord> records;
  monte_carlo_verify(config, [&](const SampleRecord& r) { records.push_back(r); });
  REQUIRE(records.size() == 50);

  for (const SampleRecord& rec : records) {
    REQUIRE(rec.checks.size() == 2);
    const WeightVector a{rec.weights};
    const AngleVector alpha{rec.angles};
    // recompute both checks from the recorded inputs alone
    const auto normal = pentagonal_bound_check(a, alpha, PentagonalForm::Normal,
                                               config.tolerance);
    CHECK(normal.lhs == rec.checks[0].lhs);
    CHECK(normal.rhs == rec.checks[0].rhs);
    const auto strong = pentagonal_bound_check(a, alpha, PentagonalForm::Strong,
                                               config.tolerance);
    CHECK(strong.rhs == rec.checks[1].rhs);
    CHECK(rec.min_gap <= rec.checks[0].gap);
    CHECK(rec.min_gap <= rec.checks[1].gap);

    // the json record carries everything needed for replay
    const auto j = sample_record_json(rec, config);
    CHECK(j.contains("weights"));
    CHECK(j.contains("angles"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("tolerance"));
    CHECK(j.contains("seed"));
    CHECK(j.contains("index"));
  }
}
