#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "cosineq/angle_literal.hpp"
#include "cosineq/numeric.hpp"
#include "cosineq/report_io.hpp"

using namespace cosineq;

TEST_CASE("angle literals: rational multiples of pi") {
  CHECK(parse_angle("pi") == kPi);
  CHECK(parse_angle("pi/5") == kPi / 5.0);
  CHECK(parse_angle("2pi/7") == 2.0 * kPi / 7.0);
  CHECK(parse_angle("3*pi/4") == 3.0 * kPi / 4.0);
  CHECK(parse_angle(" PI / 2 ") == kPi / 2.0);
  CHECK(parse_angle("2pi") == 2.0 * kPi);
}

TEST_CASE("angle literals: plain reals and fractions") {
  CHECK(parse_angle("0.5") == 0.5);
  CHECK(parse_angle("1e-1") == 0.1);
  CHECK(parse_angle("3/4") == 0.75);
}

TEST_CASE("angle literals: five pi/5 entries sum to pi exactly enough") {
  const auto a = parse_angle_list("pi/5,pi/5,pi/5,pi/5,pi/5");
  REQUIRE(a.size() == 5);
  double sum = 0.0;
  for (double v : a) sum += v;
  CHECK(std::abs(sum - kPi) <= 1e-15);
}

TEST_CASE("angle literals: malformed input is rejected") {
  CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("foo"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pi/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pi/5/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pi pi"), std::invalid_argument);
}

TEST_CASE("number lists") {
  const auto w = parse_number_list("1,2.5,3e-1");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == 2.5);
  CHECK(w[2] == 0.3);
  CHECK_THROWS_AS(parse_number_list("1,,3"), std::invalid_argument);
}

TEST_CASE("output format names round-trip") {
  CHECK(parse_output_format("human") == OutputFormat::Human);
  CHECK(parse_output_format("json-lines") == OutputFormat::JsonLines);
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
  CHECK(to_string(OutputFormat::JsonLines) == "json-lines");
}

TEST_CASE("bound records carry replayable inputs") {
  const std::vector<double> w = {1, 2, 3, 4, 5};
  const std::vector<double> ang(5, kPi / 5);
  const BoundReport r = make_bound_report(BoundKind::PentagonalNormal, 1.0, 2.0, 1e-9);
  const auto j = bound_record(r, w, ang, false);
  CHECK(j["type"] == "bound");
  CHECK(j["theorem"] == "pentagonal-normal");
  CHECK(j["n"] == 5);
  CHECK(j["weights"].size() == 5);
  CHECK(j["angles"].size() == 5);
  CHECK(j["gap"] == 1.0);
  CHECK(j["holds"] == true);
  CHECK(j["tolerance"] == 1e-9);

  const std::string row = bound_csv_row(r, w, ang, false);
  CHECK(row.find("pentagonal-normal") == 0);
  CHECK(row.find("\"1;2;3;4;5\"") != std::string::npos);
}

TEST_CASE("csv join uses semicolons inside one field") {
  const std::vector<double> v = {1.5, 2.0};
  CHECK(csv_join(v) == "1.5;2");
}
