#include "rbf/problem.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace rbf {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> parts;
  std::string part;
  while (in >> part) parts.push_back(part);
  return parts;
}

double parse_double(const std::string& s, int line, const char* key) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) {
    throw ParseError(line, std::string("invalid number for '") + key +
                               "': " + s);
  }
  return v;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0
                             ? "line " + std::to_string(line) + ": " + message
                             : message),
      line_(line) {}

ProblemFile parse_problem(std::istream& in) {
  ProblemFile problem;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  std::map<std::string, std::pair<std::string, int>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "rbf-v1") {
        throw ParseError(lineno, "expected version header 'rbf-v1'");
      }
      saw_header = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(lineno, "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ParseError(lineno, "expected 'key = value'");
    }
    if (entries.count(key)) {
      throw ParseError(lineno, "duplicate key '" + key + "'");
    }
    entries[key] = {value, lineno};
  }
  if (!saw_header) throw ParseError(0, "empty problem file (missing 'rbf-v1')");

  auto take = [&](const char* key) -> std::pair<std::string, int> {
    auto it = entries.find(key);
    if (it == entries.end()) {
      throw ParseError(0, std::string("missing key '") + key + "'");
    }
    auto result = it->second;
    entries.erase(it);
    return result;
  };
  auto take_array = [&](const char* key, int n) {
    const auto [value, at] = take(key);
    const auto parts = split_ws(value);
    if (static_cast<int>(parts.size()) != n) {
      throw ParseError(at, std::string("'") + key + "' needs exactly " +
                               std::to_string(n) + " entries");
    }
    std::vector<double> out;
    out.reserve(parts.size());
    for (const auto& part : parts) out.push_back(parse_double(part, at, key));
    return out;
  };

  {
    const auto [value, at] = take("form");
    if (value == "ordinary") {
      problem.form = FormKind::ordinary;
    } else if (value == "decoupled") {
      problem.form = FormKind::decoupled;
    } else {
      throw ParseError(at, "form must be 'ordinary' or 'decoupled'");
    }
  }
  {
    const auto [value, at] = take("class");
    if (value == "M1") {
      problem.class_kind = ClassKind::M1;
    } else if (value == "M2") {
      problem.class_kind = ClassKind::M2;
    } else {
      throw ParseError(at, "class must be 'M1' or 'M2'");
    }
  }
  {
    const auto [value, at] = take("t");
    problem.t = parse_double(value, at, "t");
    if (!(problem.t > 2.0)) throw ParseError(at, "t must be > 2");
  }
  {
    const auto [value, at] = take("n");
    const double n = parse_double(value, at, "n");
    if (n != static_cast<int>(n) || n < 2) {
      throw ParseError(at, "n must be an integer >= 2");
    }
    problem.n = static_cast<int>(n);
  }
  problem.a = take_array("a", problem.n);
  problem.b = take_array("b", problem.n);
  if (problem.form == FormKind::decoupled) {
    problem.c = take_array("c", problem.n);
    problem.d = take_array("d", problem.n);
  }
  if (entries.count("seed")) {
    const auto [value, at] = take("seed");
    const double seed = parse_double(value, at, "seed");
    if (seed < 0 || seed != static_cast<std::uint64_t>(seed)) {
      throw ParseError(at, "seed must be a nonnegative integer");
    }
    problem.seed = static_cast<std::uint64_t>(seed);
  }
  if (!entries.empty()) {
    const auto& [key, value] = *entries.begin();
    throw ParseError(value.second, "unknown key '" + key + "'");
  }
  return problem;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open problem file: " + path);
  return parse_problem(in);
}

namespace {

std::vector<MomentProfile> build_profiles(const std::vector<double>& a,
                                          const std::vector<double>& b,
                                          double t, ClassKind kind) {
  std::vector<MomentProfile> profiles;
  profiles.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    profiles.emplace_back(a[i], b[i], t, kind);
  }
  return profiles;
}

}  // namespace

std::vector<MomentProfile> x_profiles(const ProblemFile& problem) {
  return build_profiles(problem.a, problem.b, problem.t, problem.class_kind);
}

std::vector<MomentProfile> y_profiles(const ProblemFile& problem) {
  if (problem.form != FormKind::decoupled) {
    throw std::logic_error("ordinary problems have no y profiles");
  }
  return build_profiles(problem.c, problem.d, problem.t, problem.class_kind);
}

std::string format_sig(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

}  // namespace rbf
