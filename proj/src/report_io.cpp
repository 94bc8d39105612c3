#include "cosineq/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cosineq {

OutputFormat parse_output_format(std::string_view text) {
  if (text == "human") return OutputFormat::Human;
  if (text == "json-lines" || text == "jsonl") return OutputFormat::JsonLines;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("format: expected human, json-lines, or csv, got '" +
                              std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::Human: return "human";
    case OutputFormat::JsonLines: return "json-lines";
    case OutputFormat::Csv: return "csv";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", value);
  return buf;
}

namespace {

nlohmann::json check_json(const BoundReport& r) {
  return {{"theorem", std::string(to_string(r.kind))},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"gap", r.gap},
          {"holds", r.holds}};
}

std::string order_display(std::span<const int> order, int index_base) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out << '-';
    out << order[i] + index_base;
  }
  return out.str();
}

}  // namespace

nlohmann::json bound_record(const BoundReport& report, std::span<const double> weights,
                            std::span<const double> angles, bool experimental) {
  nlohmann::json j = check_json(report);
  j["type"] = "bound";
  j["n"] = weights.size();
  j["weights"] = std::vector<double>(weights.begin(), weights.end());
  j["angles"] = std::vector<double>(angles.begin(), angles.end());
  j["tolerance"] = report.tolerance;
  j["experimental"] = experimental;
  return j;
}

nlohmann::json sample_record_json(const SampleRecord& record, const SweepConfig& config) {
  nlohmann::json checks = nlohmann::json::array();
  for (const BoundReport& r : record.checks) checks.push_back(check_json(r));
  return {{"type", "sample"},
          {"index", record.index},
          {"n", config.n},
          {"seed", config.seed},
          {"tolerance", config.tolerance},
          {"experimental", config.experimental},
          {"weights", record.weights},
          {"angles", record.angles},
          {"checks", checks},
          {"min_gap", record.min_gap}};
}

nlohmann::json sweep_summary_json(const SweepSummary& summary) {
  return {{"type", "sweep-summary"},
          {"n", summary.config.n},
          {"samples", summary.config.samples},
          {"seed", summary.config.seed},
          {"tolerance", summary.config.tolerance},
          {"experimental", summary.config.experimental},
          {"violations", summary.violations},
          {"min_gap", summary.min_gap},
          {"argmin_index", summary.argmin_index},
          {"argmin_theorem", std::string(to_string(summary.argmin_kind))},
          {"argmin_weights", summary.argmin_weights},
          {"argmin_angles", summary.argmin_angles}};
}

nlohmann::json arrangement_record(const CyclicArrangement& arrangement, double phi_value,
                                  bool is_minimizer) {
  std::vector<int> order_1based;
  for (int idx : arrangement.order) order_1based.push_back(idx + 1);
  return {{"type", "arrangement"},
          {"order", order_1based},
          {"values", std::vector<double>(arrangement.values.begin(), arrangement.values.end())},
          {"phi", phi_value},
          {"is_minimizer", is_minimizer}};
}

nlohmann::json identity_record(const IdentityResidual& identity, std::size_t index,
                               std::span<const double> weights) {
  std::vector<int> oa, ob;
  for (int idx : identity.order_a) oa.push_back(idx + 1);
  for (int idx : identity.order_b) ob.push_back(idx + 1);
  return {{"type", "identity"},
          {"index", index + 1},
          {"weights", std::vector<double>(weights.begin(), weights.end())},
          {"order_a", oa},
          {"order_b", ob},
          {"diff_a", identity.diff_a},
          {"diff_b", identity.diff_b},
          {"formula", identity.formula},
          {"formula_text", identity.formula_text},
          {"residual", identity.residual}};
}

nlohmann::json sharpness_record(const SharpnessReport& report, std::span<const double> weights,
                                double tolerance) {
  return {{"type", "sharpness"},
          {"n", weights.size()},
          {"weights", std::vector<double>(weights.begin(), weights.end())},
          {"max_value", report.max_value},
          {"maximizer", report.maximizer.values()},
          {"gap_strong", report.gap_strong},
          {"gap_normal", report.gap_normal},
          {"equality_found", report.equality_found},
          {"method", std::string(to_string(report.method))},
          {"methods_agree", report.methods_agree},
          {"stationary_value", report.stationary_value},
          {"gradient_value", report.gradient_value},
          {"lambda", report.lambda},
          {"tolerance", tolerance}};
}

std::string csv_join(std::span<const double> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ';';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
    out << buf;
  }
  return out.str();
}

std::string csv_join(std::span<const int> values, int index_base) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ';';
    out << values[i] + index_base;
  }
  return out.str();
}

namespace {

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string bound_csv_header() {
  return "theorem,n,lhs,rhs,gap,tolerance,holds,experimental,weights,angles";
}

std::string bound_csv_row(const BoundReport& report, std::span<const double> weights,
                          std::span<const double> angles, bool experimental) {
  std::ostringstream out;
  out << to_string(report.kind) << ',' << weights.size() << ',' << csv_num(report.lhs) << ','
      << csv_num(report.rhs) << ',' << csv_num(report.gap) << ',' << csv_num(report.tolerance)
      << ',' << (report.holds ? "true" : "false") << ',' << (experimental ? "true" : "false")
      << ",\"" << csv_join(weights) << "\",\"" << csv_join(angles) << '"';
  return out.str();
}

std::string sample_csv_header() {
  return "index,theorem,lhs,rhs,gap,holds,weights,angles";
}

std::string sample_csv_rows(const SampleRecord& record) {
  std::ostringstream out;
  bool first = true;
  for (const BoundReport& r : record.checks) {
    if (!first) out << '\n';
    first = false;
    out << record.index << ',' << to_string(r.kind) << ',' << csv_num(r.lhs) << ','
        << csv_num(r.rhs) << ',' << csv_num(r.gap) << ',' << (r.holds ? "true" : "false")
        << ",\"" << csv_join(record.weights) << "\",\"" << csv_join(record.angles) << '"';
  }
  return out.str();
}

std::string arrangement_csv_header() { return "order,values,phi,is_minimizer"; }

std::string arrangement_csv_row(const CyclicArrangement& arrangement, double phi_value,
                                bool is_minimizer) {
  std::ostringstream out;
  out << '"' << order_display(arrangement.order, 1) << "\",\""
      << csv_join(std::span<const double>(arrangement.values)) << "\"," << csv_num(phi_value)
      << ',' << (is_minimizer ? "true" : "false");
  return out.str();
}

std::string identity_csv_header() {
  return "index,order_a,order_b,diff_a,diff_b,formula,residual,formula_text";
}

std::string identity_csv_row(const IdentityResidual& identity, std::size_t index) {
  std::ostringstream out;
  out << index + 1 << ",\"" << order_display(identity.order_a, 1) << "\",\""
      << order_display(identity.order_b, 1) << "\"," << csv_num(identity.diff_a) << ','
      << csv_num(identity.diff_b) << ',' << csv_num(identity.formula) << ','
      << csv_num(identity.residual) << ",\"" << identity.formula_text << '"';
  return out.str();
}

std::string sharpness_csv_header() {
  return "n,max_value,gap_strong,gap_normal,equality_found,method,methods_agree,lambda,"
         "weights,maximizer";
}

std::string sharpness_csv_row(const SharpnessReport& report, std::span<const double> weights,
                              double tolerance) {
  (void)tolerance;
  std::ostringstream out;
  out << weights.size() << ',' << csv_num(report.max_value) << ','
      << csv_num(report.gap_strong) << ',' << csv_num(report.gap_normal) << ','
      << (report.equality_found ? "true" : "false") << ',' << to_string(report.method) << ','
      << (report.methods_agree ? "true" : "false") << ',' << csv_num(report.lambda) << ",\""
      << csv_join(weights) << "\",\"" << csv_join(report.maximizer.values()) << '"';
  return out.str();
}

}  // namespace cosineq
