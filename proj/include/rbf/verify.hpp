#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rbf/bounds.hpp"
#include "rbf/constants.hpp"
#include "rbf/dist.hpp"

namespace rbf {

// Outcome of a randomized inequality sweep. Margins are relative slacks
// (positive means the inequality held with room); worst_margin is the most
// negative slack seen and a violation is any trial with slack below
// -tolerance. Reports are bit-reproducible for a fixed (config, seed).
struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  long trials = 0;
  long violations = 0;
  double worst_margin = 0.0;
  double tolerance = 1e-9;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, double>> extras;
};

// Grid for the single-variable comparison sweeps.
struct LemmaGrid {
  std::vector<double> z1;
  std::vector<double> z2;
  std::vector<std::pair<double, double>> ab;
  std::vector<double> t;
};

LemmaGrid default_lemma_grid(int id);

// Single-variable extremal comparisons, id in 1..4:
//   1 (2<t<4, z1>=0, M2):  E|z1 X + z2|^t - b z1^t <= E|a z1 U + z2|^t - a^t z1^t
//   2 (3<=t<4, M1):        E|z1 X + z2|^t >= E|z1 W + z2|^t
//   3 (t>=4, M2):          E|z1 X + z2|^t <= E|z1 W + z2|^t
//   4 (t>=4, z1>=0, M1):   E|z1 X + z2|^t - b z1^t >= E|a z1 U + z2|^t - a^t z1^t
// with U Rademacher and W the extremal three-point law. Each grid point draws
// trials_per_point random class members (boundary members mixed in).
VerifyReport check_lemma(int id, const LemmaGrid& grid, int trials_per_point,
                         std::uint64_t seed);

enum class ExtremalSide { sup, inf };

// Random class members never cross the closed-form bound; near-extremal
// witnesses approach it. The witness ratio (achieved/bound for sup,
// bound/achieved for inf) lands in extras["witness_ratio"]: exactly 1 for
// the regimes attained by the extremal law, close to 1 for the regimes
// approached by the approximating sequence. y_profiles is ignored for
// ordinary forms.
VerifyReport check_extremality(FormKind kind, ExtremalSide side,
                               const std::vector<MomentProfile>& x_profiles,
                               const std::vector<MomentProfile>& y_profiles,
                               double t, int trials, std::uint64_t seed);

struct ConvergenceRow {
  int m = 0;
  double achieved = 0.0;
  double gap = 0.0;  // (bound - achieved) / bound
};

struct ConvergenceReport {
  double a = 0.0, b = 0.0, t = 0.0;
  int n = 0;
  double bound = 0.0;
  double threshold = 1e-2;
  std::vector<ConvergenceRow> rows;
  bool within_bound = false;    // every achieved <= bound (1e-9 relative)
  bool gap_shrinks = false;     // final gap <= first gap + 1e-12 cushion
  bool final_below_threshold = false;
  bool passed = false;
};

// Ordinary form moment of n i.i.d. approximating laws against sup_ordinary,
// for each m in the schedule. Requires 2 < t < 4 and a^t < b strictly.
ConvergenceReport check_convergence(double a, double b, double t, int n,
                                    const std::vector<int>& m_schedule,
                                    double threshold = 1e-2);

// Random i.i.d. symmetric laws against derived_value times the max(.,.)
// normalizer, plus a tightness witness (extremal law for t >= 4, the
// approximating law at m = 10^4 otherwise) reported in extras.
VerifyReport check_rosenthal(WhichConstant which, double t, int n, int trials,
                             std::uint64_t seed);

}  // namespace rbf
