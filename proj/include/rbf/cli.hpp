#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rbf::cli {

// Exit codes shared by every subcommand: 0 success, 1 verification suite
// found violations, 2 usage or infeasibility errors.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_usage = 2;

// `bound <problem-file> --sup|--inf`: structured key: value report on out.
int cmd_bound(const std::string& path, bool want_sup, std::ostream& out,
              std::ostream& err);

struct ConstantArgs {
  std::string which = "B4";
  double t = 4.0;
  int n = 2;
  bool table = false;
  std::vector<double> t_list;  // --table only
  std::vector<int> n_list;
  std::string format = "structured";  // or "csv"
};

int cmd_constant(const ConstantArgs& args, std::ostream& out,
                 std::ostream& err);

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  int trials = 0;  // 0 means the suite default
  std::string out_path;  // empty writes the report to stdout
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace rbf::cli
