#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "rbf/verify.hpp"

using namespace rbf;

namespace {

std::vector<MomentProfile> iid(int n, double a, double b, double t,
                               ClassKind kind) {
  return std::vector<MomentProfile>(static_cast<std::size_t>(n),
                                    MomentProfile(a, b, t, kind));
}

}  // namespace

TEST_CASE("default grids cover the regime of each comparison") {
  for (int id : {1, 2}) {
    for (double t : default_lemma_grid(id).t) {
      CHECK(t > 2.0);
      CHECK(t < 4.0);
    }
  }
  for (int id : {3, 4}) {
    for (double t : default_lemma_grid(id).t) CHECK(t >= 4.0);
  }
  for (int id : {1, 2, 3, 4}) {
    const LemmaGrid grid = default_lemma_grid(id);
    CHECK_FALSE(grid.z1.empty());
    CHECK_FALSE(grid.z2.empty());
    CHECK_FALSE(grid.ab.empty());
  }
  CHECK_THROWS_AS(default_lemma_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(default_lemma_grid(5), std::invalid_argument);
}

TEST_CASE("single-variable comparisons hold on the default grids") {
  for (int id : {1, 2, 3, 4}) {
    const VerifyReport report =
        check_lemma(id, default_lemma_grid(id), 10, 2024);
    CHECK(report.violations == 0);
    CHECK(report.trials > 0);
    CHECK(report.worst_margin >= -report.tolerance);
  }
}

TEST_CASE("comparison sweeps are reproducible") {
  const VerifyReport one = check_lemma(2, default_lemma_grid(2), 7, 5);
  const VerifyReport two = check_lemma(2, default_lemma_grid(2), 7, 5);
  CHECK(one.worst_margin == two.worst_margin);
  CHECK(one.trials == two.trials);
  // boundary members sampled at 10% make the worst margin exactly zero here,
  // so distinct seeds are compared on a sweep without that degeneracy
  const VerifyReport a = check_lemma(1, default_lemma_grid(1), 7, 5);
  const VerifyReport b = check_lemma(1, default_lemma_grid(1), 7, 6);
  CHECK(a.trials == b.trials);
}

TEST_CASE("lemma sweep argument validation") {
  CHECK_THROWS_AS(check_lemma(7, default_lemma_grid(1), 5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_lemma(1, default_lemma_grid(1), 0, 1),
                  std::invalid_argument);
  LemmaGrid bad = default_lemma_grid(1);
  bad.t = {5.0};  // outside 2 < t < 4
  CHECK_THROWS_AS(check_lemma(1, bad, 5, 1), std::domain_error);
  LemmaGrid neg = default_lemma_grid(4);
  neg.z1 = {-1.0};
  CHECK_THROWS_AS(check_lemma(4, neg, 5, 1), std::domain_error);
}

TEST_CASE("random members never beat the closed-form bounds") {
  const auto m1_35 = iid(3, 1.0, 2.0, 3.5, ClassKind::M1);
  const auto m2_35 = iid(3, 1.0, 2.0, 3.5, ClassKind::M2);
  const auto m1_5 = iid(3, 1.0, 2.0, 5.0, ClassKind::M1);
  struct Row {
    FormKind kind;
    ExtremalSide side;
    const std::vector<MomentProfile>* profiles;
    double t;
  };
  const std::vector<Row> rows = {
      {FormKind::ordinary, ExtremalSide::sup, &m1_35, 3.5},
      {FormKind::ordinary, ExtremalSide::sup, &m2_35, 3.5},
      {FormKind::ordinary, ExtremalSide::inf, &m1_35, 3.5},
      {FormKind::ordinary, ExtremalSide::sup, &m1_5, 5.0},
      {FormKind::ordinary, ExtremalSide::inf, &m1_5, 5.0},
      {FormKind::decoupled, ExtremalSide::sup, &m1_35, 3.5},
      {FormKind::decoupled, ExtremalSide::inf, &m1_5, 5.0},
  };
  for (const Row& row : rows) {
    const VerifyReport report = check_extremality(
        row.kind, row.side, *row.profiles, *row.profiles, row.t, 40, 9);
    CAPTURE(row.t);
    CHECK(report.violations == 0);
    CHECK(report.trials == 41);  // the witness is tracked too
  }
}

TEST_CASE("witnesses reach the bound in the attained regimes") {
  const auto m1_5 = iid(3, 1.0, 2.0, 5.0, ClassKind::M1);
  const VerifyReport sup5 = check_extremality(
      FormKind::ordinary, ExtremalSide::sup, m1_5, m1_5, 5.0, 10, 3);
  const auto m1_35 = iid(3, 1.0, 2.0, 3.5, ClassKind::M1);
  const VerifyReport inf35 = check_extremality(
      FormKind::ordinary, ExtremalSide::inf, m1_35, m1_35, 3.5, 10, 3);
  for (const VerifyReport* report : {&sup5, &inf35}) {
    double ratio = 0.0;
    for (const auto& [key, value] : report->extras) {
      if (key == "witness_ratio") ratio = value;
    }
    CHECK(std::fabs(ratio - 1.0) <= 1e-9);
  }
}

TEST_CASE("witnesses approach the bound in the approximated regimes") {
  const auto m1_3 = iid(3, 1.0, 2.0, 3.0, ClassKind::M1);
  const VerifyReport sup3 = check_extremality(
      FormKind::ordinary, ExtremalSide::sup, m1_3, m1_3, 3.0, 10, 3);
  const auto m1_45 = iid(2, 1.0, 2.0, 4.5, ClassKind::M1);
  const VerifyReport inf45 = check_extremality(
      FormKind::ordinary, ExtremalSide::inf, m1_45, m1_45, 4.5, 10, 3);
  for (const VerifyReport* report : {&sup3, &inf45}) {
    double ratio = 0.0;
    for (const auto& [key, value] : report->extras) {
      if (key == "witness_ratio") ratio = value;
    }
    CHECK(ratio >= 0.99);
    CHECK(ratio <= 1.0 + 1e-9);
  }
}

TEST_CASE("approximating sequence closes the gap to the supremum") {
  const ConvergenceReport report =
      check_convergence(1.0, 2.0, 3.5, 3, {10, 100, 1000});
  CHECK(report.passed);
  CHECK(report.within_bound);
  CHECK(report.gap_shrinks);
  CHECK(report.final_below_threshold);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].gap > report.rows[2].gap);
  CHECK(report.rows[2].gap < 1e-2);
  CHECK(report.bound > 0.0);
}

TEST_CASE("convergence validation") {
  CHECK_THROWS_AS(check_convergence(1.0, 2.0, 4.0, 3, {10, 100}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_convergence(1.0, 2.0, 3.5, 1, {10, 100}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_convergence(1.0, 2.0, 3.5, 3, {100, 10}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_convergence(1.0, 2.0, 3.5, 3, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_convergence(1.0, 1.0, 3.5, 3, {10, 100}),
                  std::invalid_argument);
}

TEST_CASE("normalized moment inequality sweeps stay below the constants") {
  for (WhichConstant which : {WhichConstant::B4, WhichConstant::B5,
                              WhichConstant::B6, WhichConstant::B7}) {
    for (double t : {3.0, 5.0}) {
      const VerifyReport report = check_rosenthal(which, t, 3, 30, 17);
      CAPTURE(which_name(which));
      CAPTURE(t);
      CHECK(report.violations == 0);
      CHECK(report.worst_margin >= -report.tolerance);
    }
  }
}

TEST_CASE("constant witnesses are tight") {
  double ratio4 = 0.0, ratio3 = 0.0;
  for (const auto& [key, value] :
       check_rosenthal(WhichConstant::B5, 5.0, 3, 10, 2).extras) {
    if (key == "witness_ratio") ratio4 = value;
  }
  CHECK(std::fabs(ratio4 - 1.0) <= 1e-9);
  for (const auto& [key, value] :
       check_rosenthal(WhichConstant::B5, 3.0, 3, 10, 2).extras) {
    if (key == "witness_ratio") ratio3 = value;
  }
  CHECK(ratio3 >= 0.99);
  CHECK(ratio3 <= 1.0 + 1e-9);
}

TEST_CASE("rosenthal sweeps are reproducible") {
  const VerifyReport one = check_rosenthal(WhichConstant::B6, 3.5, 2, 20, 8);
  const VerifyReport two = check_rosenthal(WhichConstant::B6, 3.5, 2, 20, 8);
  CHECK(one.worst_margin == two.worst_margin);
  CHECK(one.violations == two.violations);
}
