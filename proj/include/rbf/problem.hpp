#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbf/dist.hpp"
#include "rbf/moments.hpp"

namespace rbf {

// Malformed problem file; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Flat text problem description, version header "rbf-v1". Keys: form, class,
// t, n, a, b (and c, d for decoupled forms), optional seed. '#' starts a
// comment; arrays are space-separated and must have n entries.
struct ProblemFile {
  FormKind form = FormKind::ordinary;
  ClassKind class_kind = ClassKind::M1;
  double t = 0.0;
  int n = 0;
  std::vector<double> a, b, c, d;
  std::optional<std::uint64_t> seed;
};

ProblemFile parse_problem(std::istream& in);
ProblemFile load_problem(const std::string& path);

// Profiles built from (a, b) and, for decoupled forms, (c, d). Feasibility
// violations surface as FeasibilityError.
std::vector<MomentProfile> x_profiles(const ProblemFile& problem);
std::vector<MomentProfile> y_profiles(const ProblemFile& problem);

// 12 significant digits, shortest form ("%.12g").
std::string format_sig(double x);

}  // namespace rbf
