#pragma once

#include <vector>

#include "rbf/dist.hpp"
#include "rbf/moments.hpp"

namespace rbf {

enum class Regime { sup_2to4, inf_3to4, sup_ge4, inf_ge4 };

const char* regime_name(Regime regime);

// Breakdown of the additive bound: pairwise products of t-th moment excesses,
// excess-weighted linear moments, and the sign-chaos moment. Regimes whose
// bound is a single extremal-chaos expectation put the whole value in
// chaos_term and zero the other two, so value == sum of terms always holds.
struct TermBreakdown {
  double product_term = 0.0;
  double cross_terms = 0.0;
  double chaos_term = 0.0;
};

struct BoundReport {
  double value = 0.0;
  TermBreakdown terms;
  Regime regime = Regime::sup_2to4;
  FormKind form_kind = FormKind::ordinary;
};

// Sharp supremum of E|sum_{i<j} X_i X_j|^t over the class (valid for both M1
// and M2 profiles). 2 < t < 4 uses the additive formula; t >= 4 the chaos
// moment of the extremal three-point laws. Requires t > 2 and n >= 2; all
// profiles must carry the call's t.
BoundReport sup_ordinary(const std::vector<MomentProfile>& profiles, double t);

// Sharp infimum over the equality class M1. 3 <= t < 4 is the extremal chaos
// moment; t >= 4 the additive formula. Throws std::domain_error for
// 2 < t < 3 (no closed form in scope) and for M2 profiles.
BoundReport inf_ordinary(const std::vector<MomentProfile>& profiles, double t);

// Decoupled analogues for E|sum_{i!=j} X_i Y_j|^t with per-sequence profile
// lists of equal length.
BoundReport sup_decoupled(const std::vector<MomentProfile>& x_profiles,
                          const std::vector<MomentProfile>& y_profiles,
                          double t);
BoundReport inf_decoupled(const std::vector<MomentProfile>& x_profiles,
                          const std::vector<MomentProfile>& y_profiles,
                          double t);

}  // namespace rbf
