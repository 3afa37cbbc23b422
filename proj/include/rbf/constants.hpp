#pragma once

#include <vector>

#include "rbf/bounds.hpp"
#include "rbf/dist.hpp"

namespace rbf {

// Best constants in the four normalized moment inequalities:
//   B4: ordinary form,  normalizer max(C(n,2) (E|X|^t)^2, C(n,2)^(t/2) (EX^2)^t)
//   B5: ordinary form,  normalizer max(n^2 (E|X|^t)^2, n^t (EX^2)^t)
//   B6: decoupled form, B4's normalizer
//   B7: decoupled form, B5's normalizer
enum class WhichConstant { B4, B5, B6, B7 };

const char* which_name(WhichConstant which);
bool is_decoupled(WhichConstant which);

enum class ConstantRegime { below4, atleast4 };

struct ConstantQuery {
  WhichConstant which = WhichConstant::B4;
  double t = 4.0;
  int n = 2;
};

// literal_value transcribes the published closed-form display for the
// constant; derived_value evaluates the sharp supremum bound at the implied
// normalized profile. The two disagree for generic (t, n) in the 2 < t < 4
// displays; relative_gap = |literal - derived| / derived reports that
// discrepancy and derived_value is the one backed by the extremal theory.
struct ConstantReport {
  WhichConstant which = WhichConstant::B4;
  double t = 4.0;
  int n = 2;
  double literal_value = 0.0;
  double derived_value = 0.0;
  double relative_gap = 0.0;
  ConstantRegime regime = ConstantRegime::atleast4;
};

// Equality-class profile at which the normalizer equals one:
// (C(n,2)^(-1/4), C(n,2)^(-1/2)) for B4/B6 and (n^(-1/2), 1/n) for B5/B7.
MomentProfile implied_profile(WhichConstant which, double t, int n);

// The max(.,.) normalizer of the inequality, evaluated at a law with the
// given moments.
double max_normalizer(WhichConstant which, int n, double t,
                      double second_moment, double t_moment);

ConstantReport best_constant(const ConstantQuery& query);

// Cartesian product of queries, rows sorted by (which, t, n).
std::vector<ConstantReport> constant_table(std::vector<WhichConstant> which,
                                           std::vector<double> t_list,
                                           std::vector<int> n_list);

}  // namespace rbf
