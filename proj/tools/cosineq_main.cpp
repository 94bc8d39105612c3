// cosineq: evaluate and verify the sharp pentagonal/heptagonal cosine-sum
// bounds, search weight arrangements, and run sharpness and Monte-Carlo
// sweeps with machine-readable output.
//
// Exit codes: 0 all checks pass, 1 input error, 2 bound/check violation,
// 3 solver failure.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cosineq/angle_literal.hpp"
#include "cosineq/arrangements.hpp"
#include "cosineq/bounds.hpp"
#include "cosineq/monte_carlo.hpp"
#include "cosineq/numeric.hpp"
#include "cosineq/report_io.hpp"
#include "cosineq/sharpness.hpp"

namespace {

using namespace cosineq;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitSolver = 3;

struct Options {
  int n = 0;
  std::string weights;
  std::string angles;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string format = "human";
  bool experimental = false;
  int threads = 1;
};

std::vector<double> require_weights(const Options& opt) {
  if (opt.weights.empty()) {
    throw std::invalid_argument("weights: required (--weights a1,a2,...)");
  }
  std::vector<double> w = parse_number_list(opt.weights);
  if (opt.n != 0 && static_cast<std::size_t>(opt.n) != w.size()) {
    throw std::invalid_argument("weights: expected " + std::to_string(opt.n) +
                                " entries for --n " + std::to_string(opt.n) + ", got " +
                                std::to_string(w.size()));
  }
  return w;
}

std::vector<double> require_angles(const Options& opt, std::size_t n) {
  if (opt.angles.empty()) {
    throw std::invalid_argument("angles: required (--angles pi/5,pi/5,...)");
  }
  std::vector<double> a = parse_angle_list(opt.angles);
  if (a.size() != n) {
    throw std::invalid_argument("angles: expected " + std::to_string(n) + " entries, got " +
                                std::to_string(a.size()));
  }
  return a;
}

std::string human_num(double v) {
  std::string s = format_double(v);
  return s;
}

int run_bound(const Options& opt) {
  const std::vector<double> w = require_weights(opt);
  const std::vector<double> ang = require_angles(opt, w.size());
  const WeightVector weights{w};
  const AngleVector angles{ang};

  if (weights.size() != 5 && weights.size() != 7 && !opt.experimental) {
    throw std::invalid_argument(
        "bound: n must be 5 or 7; pass --experimental for odd n >= 9");
  }
  const std::vector<BoundReport> checks =
      applicable_checks(weights, angles, opt.tol, opt.experimental);
  const OutputFormat format = parse_output_format(opt.format);

  bool all_hold = true;
  if (format == OutputFormat::Csv) std::cout << bound_csv_header() << '\n';
  for (const BoundReport& r : checks) {
    all_hold = all_hold && r.holds;
    const bool experimental_kind = (r.kind == BoundKind::OddNExperimental);
    switch (format) {
      case OutputFormat::JsonLines:
        std::cout << bound_record(r, weights.span(), angles.span(), experimental_kind).dump()
                  << '\n';
        break;
      case OutputFormat::Csv:
        std::cout << bound_csv_row(r, weights.span(), angles.span(), experimental_kind)
                  << '\n';
        break;
      case OutputFormat::Human:
        std::cout << std::left << std::setw(20) << to_string(r.kind) << " lhs="
                  << human_num(r.lhs) << "  rhs=" << human_num(r.rhs)
                  << "  gap=" << human_num(r.gap) << "  holds=" << (r.holds ? "yes" : "NO")
                  << (experimental_kind ? "  [experimental]" : "") << '\n';
        break;
    }
  }
  if (format == OutputFormat::Human) {
    std::cout << (all_hold ? "all bounds hold" : "BOUND VIOLATION") << " (tolerance "
              << human_num(opt.tol) << ")\n";
  }
  return all_hold ? kExitOk : kExitViolation;
}

int run_arrange(const Options& opt) {
  const std::vector<double> w = require_weights(opt);
  const std::vector<CyclicArrangement> all = enumerate_arrangements(w);
  const MinPhiResult best = min_phi_arrangement(w);
  const OutputFormat format = parse_output_format(opt.format);

  if (format == OutputFormat::Csv) std::cout << arrangement_csv_header() << '\n';
  for (const CyclicArrangement& arr : all) {
    const double p = phi(arr.cyclic());
    const bool is_min = arr.order == best.arrangement.order;
    switch (format) {
      case OutputFormat::JsonLines:
        std::cout << arrangement_record(arr, p, is_min).dump() << '\n';
        break;
      case OutputFormat::Csv:
        std::cout << arrangement_csv_row(arr, p, is_min) << '\n';
        break;
      case OutputFormat::Human: {
        std::ostringstream order;
        for (std::size_t i = 0; i < 5; ++i) {
          if (i > 0) order << '-';
          order << arr.order[i] + 1;
        }
        std::cout << std::left << std::setw(12) << order.str() << " phi="
                  << human_num(p) << (is_min ? "   <- minimizer" : "") << '\n';
        break;
      }
    }
  }

  const bool sorted = std::is_sorted(w.begin(), w.end());
  if (sorted) {
    const double phi_s0 = phi(sigma0_arrangement(w).cyclic());
    const bool agrees = rel_close(best.phi_value, phi_s0, 1e-12);
    if (format == OutputFormat::Human) {
      std::cout << "sorted input: exhaustive minimum " << human_num(best.phi_value)
                << (agrees ? " agrees with" : " DISAGREES with") << " the (a1,a5,a2,a3,a4) value "
                << human_num(phi_s0) << '\n';
    }
    if (!agrees) return kExitViolation;
  } else if (format == OutputFormat::Human) {
    std::cout << "unsorted input: exhaustive minimum " << human_num(best.phi_value) << '\n';
  }
  return kExitOk;
}

int run_lemma1_check(const Options& opt) {
  const std::vector<double> w = require_weights(opt);
  const std::vector<IdentityResidual> rows = lemma1_residuals(w);
  const OutputFormat format = parse_output_format(opt.format);

  bool pass = true;
  if (format == OutputFormat::Csv) std::cout << identity_csv_header() << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const IdentityResidual& r = rows[i];
    const bool row_ok =
        rel_close(r.diff_a, r.formula, opt.tol) && rel_close(r.diff_b, r.formula, opt.tol) &&
        r.formula >= 0.0;
    pass = pass && row_ok;
    switch (format) {
      case OutputFormat::JsonLines:
        std::cout << identity_record(r, i, w).dump() << '\n';
        break;
      case OutputFormat::Csv:
        std::cout << identity_csv_row(r, i) << '\n';
        break;
      case OutputFormat::Human: {
        std::ostringstream oa, ob;
        for (std::size_t k = 0; k < 5; ++k) {
          if (k > 0) {
            oa << '-';
            ob << '-';
          }
          oa << r.order_a[k] + 1;
          ob << r.order_b[k] + 1;
        }
        std::cout << std::setw(2) << i + 1 << "  " << oa.str() << " / " << ob.str()
                  << "  diff=" << human_num(r.diff_a) << "  formula=" << human_num(r.formula)
                  << "  residual=" << human_num(r.residual) << "  [" << r.formula_text << "]"
                  << (row_ok ? "" : "  FAIL") << '\n';
        break;
      }
    }
  }
  if (format == OutputFormat::Human) {
    std::cout << (pass ? "all 12 identities hold" : "IDENTITY FAILURE") << " (tolerance "
              << human_num(opt.tol) << ")\n";
  }
  return pass ? kExitOk : kExitViolation;
}

int run_sharpness(const Options& opt) {
  const std::vector<double> w = require_weights(opt);
  const WeightVector weights{w};
  const SharpnessReport report = max_cosine_sum(weights, opt.tol);
  const OutputFormat format = parse_output_format(opt.format);

  switch (format) {
    case OutputFormat::JsonLines:
      std::cout << sharpness_record(report, weights.span(), opt.tol).dump() << '\n';
      break;
    case OutputFormat::Csv:
      std::cout << sharpness_csv_header() << '\n'
                << sharpness_csv_row(report, weights.span(), opt.tol) << '\n';
      break;
    case OutputFormat::Human: {
      std::cout << "max_value      = " << human_num(report.max_value) << '\n';
      std::cout << "maximizer      =";
      for (double a : report.maximizer.values()) std::cout << ' ' << human_num(a);
      std::cout << '\n';
      std::cout << "gap_strong     = " << human_num(report.gap_strong) << '\n'
                << "gap_normal     = " << human_num(report.gap_normal) << '\n'
                << "equality_found = " << (report.equality_found ? "yes" : "no") << '\n'
                << "method         = " << to_string(report.method)
                << (report.methods_agree ? " (methods agree)" : " (METHOD DISAGREEMENT)")
                << '\n';
      break;
    }
  }
  // A maximum beyond the sharpest right side would contradict the bound.
  if (report.gap_strong < -opt.tol) return kExitViolation;
  return kExitOk;
}

int run_sweep(const Options& opt) {
  SweepConfig config;
  config.n = opt.n == 0 ? 5 : opt.n;
  config.samples = opt.samples;
  config.seed = opt.seed;
  config.tolerance = opt.tol;
  config.experimental = opt.experimental;
  config.threads = opt.threads;

  const OutputFormat format = parse_output_format(opt.format);
  std::function<void(const SampleRecord&)> on_sample;
  if (format == OutputFormat::JsonLines) {
    on_sample = [&](const SampleRecord& rec) {
      std::cout << sample_record_json(rec, config).dump() << '\n';
    };
  } else if (format == OutputFormat::Csv) {
    std::cout << sample_csv_header() << '\n';
    on_sample = [&](const SampleRecord& rec) { std::cout << sample_csv_rows(rec) << '\n'; };
  }

  const SweepSummary summary = monte_carlo_verify(config, on_sample);

  switch (format) {
    case OutputFormat::JsonLines:
      std::cout << sweep_summary_json(summary).dump() << '\n';
      break;
    case OutputFormat::Csv:
      // rows went to stdout; keep the summary out of the table
      std::cerr << sweep_summary_json(summary).dump() << '\n';
      break;
    case OutputFormat::Human:
      std::cout << "n          = " << summary.config.n
                << (summary.config.experimental ? " [experimental]" : "") << '\n'
                << "samples    = " << summary.config.samples << '\n'
                << "seed       = " << summary.config.seed << '\n'
                << "violations = " << summary.violations << '\n'
                << "min_gap    = " << human_num(summary.min_gap) << " at sample "
                << summary.argmin_index << " (" << to_string(summary.argmin_kind) << ")\n"
                << "argmin_weights =";
      for (double x : summary.argmin_weights) std::cout << ' ' << human_num(x);
      std::cout << "\nargmin_angles  =";
      for (double x : summary.argmin_angles) std::cout << ' ' << human_num(x);
      std::cout << '\n';
      break;
  }
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cosineq: sharp cosine-sum bounds for weighted angle sums (n=5 pentagonal, n=7 "
      "heptagonal), weight-arrangement search, and numerical sharpness certification."};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* cmd, bool wants_angles, bool wants_sweep) {
    cmd->add_option("--n", opt.n, "entry count (inferred from --weights when omitted)");
    cmd->add_option("--weights", opt.weights, "comma-separated positive weights");
    if (wants_angles) {
      cmd->add_option("--angles", opt.angles,
                      "comma-separated angles; accepts literals like pi/5, 2pi/7, 0.75");
    }
    cmd->add_option("--tol", opt.tol, "check tolerance (default 1e-9)");
    cmd->add_option("--format", opt.format, "output format: human, json-lines, csv");
    cmd->add_flag("--experimental", opt.experimental,
                  "allow the unproven odd n >= 9 window bound");
    if (wants_sweep) {
      cmd->add_option("--samples", opt.samples, "number of Monte-Carlo samples");
      cmd->add_option("--seed", opt.seed, "RNG seed; same seed gives identical output");
      cmd->add_option("--threads", opt.threads,
                      "worker threads (results are independent of this)");
    }
  };

  CLI::App* bound = app.add_subcommand(
      "bound", "evaluate every applicable bound for given weights and angles");
  add_common(bound, true, false);

  CLI::App* arrange = app.add_subcommand(
      "arrange", "list all 24 pinned arrangements of 5 weights with their phi values");
  add_common(arrange, false, false);

  CLI::App* lemma1 = app.add_subcommand(
      "lemma1-check", "verify the 12 factored difference identities for sorted weights");
  add_common(lemma1, false, false);

  CLI::App* sharp = app.add_subcommand(
      "sharpness", "maximize the cosine sum over the angle simplex and report gaps");
  add_common(sharp, false, false);

  CLI::App* sweep = app.add_subcommand(
      "sweep",
      "seeded Monte-Carlo verification sweep; weights log-uniform on [0.1, 10], angles "
      "uniform on the simplex (flat Dirichlet scaled to pi), one splitmix64 stream per "
      "sample");
  add_common(sweep, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (bound->parsed()) return run_bound(opt);
    if (arrange->parsed()) return run_arrange(opt);
    if (lemma1->parsed()) return run_lemma1_check(opt);
    if (sharp->parsed()) return run_sharpness(opt);
    if (sweep->parsed()) return run_sweep(opt);
  } catch (const ConvergenceError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
