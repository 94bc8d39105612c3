#pragma once

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cosineq/arrangements.hpp"
#include "cosineq/bounds.hpp"
#include "cosineq/monte_carlo.hpp"
#include "cosineq/sharpness.hpp"

namespace cosineq {

enum class OutputFormat { Human, JsonLines, Csv };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat format) noexcept;

// One machine-readable record per check/sample; every record carries enough
// input to be replayed standalone.
nlohmann::json bound_record(const BoundReport& report, std::span<const double> weights,
                            std::span<const double> angles, bool experimental);
nlohmann::json sample_record_json(const SampleRecord& record, const SweepConfig& config);
nlohmann::json sweep_summary_json(const SweepSummary& summary);
nlohmann::json arrangement_record(const CyclicArrangement& arrangement, double phi_value,
                                  bool is_minimizer);
nlohmann::json identity_record(const IdentityResidual& identity, std::size_t index,
                               std::span<const double> weights);
nlohmann::json sharpness_record(const SharpnessReport& report, std::span<const double> weights,
                                double tolerance);

// CSV: lists are semicolon-joined inside one field.
std::string csv_join(std::span<const double> values);
std::string csv_join(std::span<const int> values, int index_base);

std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& report, std::span<const double> weights,
                          std::span<const double> angles, bool experimental);
std::string sample_csv_header();
std::string sample_csv_rows(const SampleRecord& record);
std::string arrangement_csv_header();
std::string arrangement_csv_row(const CyclicArrangement& arrangement, double phi_value,
                                bool is_minimizer);
std::string identity_csv_header();
std::string identity_csv_row(const IdentityResidual& identity, std::size_t index);
std::string sharpness_csv_header();
std::string sharpness_csv_row(const SharpnessReport& report, std::span<const double> weights,
                              double tolerance);

// Shortest-round-trip-ish display for human output (15 significant digits).
std::string format_double(double value);

}  // namespace cosineq
