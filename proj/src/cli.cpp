#include "rbf/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "rbf/bounds.hpp"
#include "rbf/constants.hpp"
#include "rbf/problem.hpp"
#include "rbf/verify.hpp"

namespace rbf::cli {

namespace {

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return exit_usage;
}

void print_report(const BoundReport& report, const ProblemFile& problem,
                  bool want_sup, std::ostream& out) {
  out << "form: "
      << (problem.form == FormKind::ordinary ? "ordinary" : "decoupled")
      << "\n";
  out << "class: " << (problem.class_kind == ClassKind::M1 ? "M1" : "M2")
      << "\n";
  out << "side: " << (want_sup ? "sup" : "inf") << "\n";
  out << "regime: " << regime_name(report.regime) << "\n";
  out << "t: " << format_sig(problem.t) << "\n";
  out << "n: " << problem.n << "\n";
  out << "value: " << format_sig(report.value) << "\n";
  out << "product_term: " << format_sig(report.terms.product_term) << "\n";
  out << "cross_terms: " << format_sig(report.terms.cross_terms) << "\n";
  out << "chaos_term: " << format_sig(report.terms.chaos_term) << "\n";
}

const char* constant_regime_name(ConstantRegime regime) {
  return regime == ConstantRegime::below4 ? "2<t<4" : "t>=4";
}

void print_constant_structured(const ConstantReport& report,
                               std::ostream& out) {
  out << "which: " << which_name(report.which) << "\n";
  out << "t: " << format_sig(report.t) << "\n";
  out << "n: " << report.n << "\n";
  out << "regime: " << constant_regime_name(report.regime) << "\n";
  out << "literal: " << format_sig(report.literal_value) << "\n";
  out << "derived: " << format_sig(report.derived_value) << "\n";
  out << "relative_gap: " << format_sig(report.relative_gap) << "\n";
}

void print_constant_csv_row(const ConstantReport& report, std::ostream& out) {
  out << which_name(report.which) << "," << format_sig(report.t) << ","
      << report.n << "," << format_sig(report.literal_value) << ","
      << format_sig(report.derived_value) << ","
      << format_sig(report.relative_gap) << "\n";
}

bool parse_which(const std::string& name, WhichConstant& which) {
  if (name == "B4") {
    which = WhichConstant::B4;
  } else if (name == "B5") {
    which = WhichConstant::B5;
  } else if (name == "B6") {
    which = WhichConstant::B6;
  } else if (name == "B7") {
    which = WhichConstant::B7;
  } else {
    return false;
  }
  return true;
}

void print_verify_report(const VerifyReport& report, std::ostream& out) {
  if (!report.config.empty()) {
    out << "config:";
    for (const auto& [key, value] : report.config) {
      out << " " << key << "=" << value;
    }
    out << "\n";
  }
  out << "trials: " << report.trials << "\n";
  out << "violations: " << report.violations << "\n";
  out << "worst_margin: " << format_sig(report.worst_margin) << "\n";
  for (const auto& [key, value] : report.extras) {
    out << key << ": " << format_sig(value) << "\n";
  }
}

struct SuiteResult {
  long trials = 0;
  long violations = 0;
  std::string body;
};

SuiteResult run_lemma_suite(int id, std::uint64_t seed, int trials) {
  const int per_point = trials > 0 ? trials : 50;
  const VerifyReport report =
      check_lemma(id, default_lemma_grid(id), per_point, seed);
  SuiteResult result;
  result.trials = report.trials;
  result.violations = report.violations;
  std::ostringstream body;
  print_verify_report(report, body);
  result.body = body.str();
  return result;
}

SuiteResult run_extremality_suite(std::uint64_t seed, int trials) {
  const int per_config = trials > 0 ? trials : 200;
  const std::vector<double> a = {1.0, 1.0, 1.0};
  const std::vector<double> b = {2.0, 2.0, 2.0};
  auto profiles = [&](double t, ClassKind kind) {
    std::vector<MomentProfile> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      out.emplace_back(a[i], b[i], t, kind);
    }
    return out;
  };
  struct Config {
    FormKind kind;
    ExtremalSide side;
    double t;
    ClassKind class_kind;
  };
  const std::vector<Config> configs = {
      {FormKind::ordinary, ExtremalSide::sup, 3.0, ClassKind::M1},
      {FormKind::ordinary, ExtremalSide::sup, 3.0, ClassKind::M2},
      {FormKind::ordinary, ExtremalSide::sup, 4.5, ClassKind::M1},
      {FormKind::ordinary, ExtremalSide::sup, 4.5, ClassKind::M2},
      {FormKind::ordinary, ExtremalSide::inf, 3.5, ClassKind::M1},
      {FormKind::ordinary, ExtremalSide::inf, 5.0, ClassKind::M1},
      {FormKind::decoupled, ExtremalSide::sup, 3.0, ClassKind::M1},
      {FormKind::decoupled, ExtremalSide::sup, 4.5, ClassKind::M2},
      {FormKind::decoupled, ExtremalSide::inf, 3.5, ClassKind::M1},
      {FormKind::decoupled, ExtremalSide::inf, 5.0, ClassKind::M1},
  };
  SuiteResult result;
  std::ostringstream body;
  std::uint64_t config_index = 0;
  for (const auto& config : configs) {
    const auto x = profiles(config.t, config.class_kind);
    const VerifyReport report =
        check_extremality(config.kind, config.side, x, x, config.t,
                          per_config, seed + config_index);
    ++config_index;
    result.trials += report.trials;
    result.violations += report.violations;
    if (config_index > 1) body << "\n";
    print_verify_report(report, body);
  }
  result.body = body.str();
  return result;
}

SuiteResult run_convergence_suite(std::uint64_t seed) {
  (void)seed;  // deterministic suite; seed kept for interface symmetry
  const std::vector<int> schedule = {10, 100, 1000, 10000};
  SuiteResult result;
  std::ostringstream body;
  bool first = true;
  for (double t : {2.5, 3.0, 3.5}) {
    for (int n : {2, 3}) {
      const ConvergenceReport report =
          check_convergence(1.0, 2.0, t, n, schedule);
      result.trials += static_cast<long>(report.rows.size());
      if (!report.passed) result.violations += 1;
      if (!first) body << "\n";
      first = false;
      body << "config: a=1 b=2 t=" << format_sig(t) << " n=" << n << "\n";
      body << "bound: " << format_sig(report.bound) << "\n";
      for (const auto& row : report.rows) {
        body << "row: m=" << row.m << " achieved=" << format_sig(row.achieved)
             << " gap=" << format_sig(row.gap) << "\n";
      }
      body << "within_bound: " << (report.within_bound ? "yes" : "no") << "\n";
      body << "gap_shrinks: " << (report.gap_shrinks ? "yes" : "no") << "\n";
      body << "final_below_threshold: "
           << (report.final_below_threshold ? "yes" : "no") << "\n";
    }
  }
  result.body = body.str();
  return result;
}

SuiteResult run_rosenthal_suite(std::uint64_t seed, int trials) {
  const int per_config = trials > 0 ? trials : 100;
  SuiteResult result;
  std::ostringstream body;
  std::uint64_t config_index = 0;
  for (WhichConstant which : {WhichConstant::B4, WhichConstant::B5,
                              WhichConstant::B6, WhichConstant::B7}) {
    for (double t : {2.5, 3.0, 4.0, 5.0}) {
      for (int n : {2, 3, 4}) {
        const VerifyReport report =
            check_rosenthal(which, t, n, per_config, seed + config_index);
        ++config_index;
        result.trials += report.trials;
        result.violations += report.violations;
        if (config_index > 1) body << "\n";
        print_verify_report(report, body);
      }
    }
  }
  result.body = body.str();
  return result;
}

}  // namespace

int cmd_bound(const std::string& path, bool want_sup, std::ostream& out,
              std::ostream& err) {
  try {
    const ProblemFile problem = load_problem(path);
    const auto x = x_profiles(problem);
    BoundReport report;
    if (problem.form == FormKind::ordinary) {
      report = want_sup ? sup_ordinary(x, problem.t)
                        : inf_ordinary(x, problem.t);
    } else {
      const auto y = y_profiles(problem);
      report = want_sup ? sup_decoupled(x, y, problem.t)
                        : inf_decoupled(x, y, problem.t);
    }
    print_report(report, problem, want_sup, out);
    return exit_ok;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_constant(const ConstantArgs& args, std::ostream& out,
                 std::ostream& err) {
  try {
    if (args.format != "csv" && args.format != "structured") {
      return usage_error(err, "format must be 'csv' or 'structured'");
    }
    if (!args.table) {
      WhichConstant which;
      if (!parse_which(args.which, which)) {
        return usage_error(err, "unknown constant '" + args.which +
                                    "' (expected B4, B5, B6 or B7)");
      }
      const ConstantReport report = best_constant({which, args.t, args.n});
      if (args.format == "csv") {
        out << "which,t,n,literal,derived,gap\n";
        print_constant_csv_row(report, out);
      } else {
        print_constant_structured(report, out);
      }
      return exit_ok;
    }
    if (args.t_list.empty() || args.n_list.empty()) {
      return usage_error(err, "--table needs --t-list and --n-list");
    }
    std::vector<WhichConstant> which;
    if (args.which == "all") {
      which = {WhichConstant::B4, WhichConstant::B5, WhichConstant::B6,
               WhichConstant::B7};
    } else {
      WhichConstant one;
      if (!parse_which(args.which, one)) {
        return usage_error(err, "unknown constant '" + args.which +
                                    "' (expected B4, B5, B6, B7 or all)");
      }
      which = {one};
    }
    const auto rows = constant_table(which, args.t_list, args.n_list);
    if (args.format == "csv") {
      out << "which,t,n,literal,derived,gap\n";
      for (const auto& row : rows) print_constant_csv_row(row, out);
    } else {
      bool first = true;
      for (const auto& row : rows) {
        if (!first) out << "\n";
        first = false;
        print_constant_structured(row, out);
      }
    }
    return exit_ok;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  SuiteResult result;
  try {
    if (args.suite == "lemma1" || args.suite == "lemma2" ||
        args.suite == "lemma3" || args.suite == "lemma4") {
      result = run_lemma_suite(args.suite.back() - '0', args.seed,
                               args.trials);
    } else if (args.suite == "extremality") {
      result = run_extremality_suite(args.seed, args.trials);
    } else if (args.suite == "convergence") {
      result = run_convergence_suite(args.seed);
    } else if (args.suite == "rosenthal") {
      result = run_rosenthal_suite(args.seed, args.trials);
    } else {
      return usage_error(err,
                         "unknown suite '" + args.suite +
                             "' (expected lemma1..lemma4, extremality, "
                             "convergence or rosenthal)");
    }
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
  std::ostringstream report;
  report << "suite: " << args.suite << "\n";
  report << "seed: " << args.seed << "\n";
  report << "trials: " << result.trials << "\n";
  report << "violations: " << result.violations << "\n";
  report << "\n" << result.body;
  if (args.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(args.out_path);
    if (!file) {
      return usage_error(err, "cannot write report to " + args.out_path);
    }
    file << report.str();
    out << "suite " << args.suite << ": " << result.violations
        << " violations in " << result.trials << " trials -> "
        << args.out_path << "\n";
  }
  return result.violations == 0 ? exit_ok : exit_violations;
}

}  // namespace rbf::cli
