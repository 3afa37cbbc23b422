#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rbf/constants.hpp"
#include "rbf/numeric.hpp"

using namespace rbf;

TEST_CASE("names and form kinds") {
  CHECK(std::string(which_name(WhichConstant::B4)) == "B4");
  CHECK(std::string(which_name(WhichConstant::B7)) == "B7");
  CHECK_FALSE(is_decoupled(WhichConstant::B4));
  CHECK_FALSE(is_decoupled(WhichConstant::B5));
  CHECK(is_decoupled(WhichConstant::B6));
  CHECK(is_decoupled(WhichConstant::B7));
}

TEST_CASE("implied profiles normalize their own inequality") {
  for (WhichConstant which : {WhichConstant::B4, WhichConstant::B5,
                              WhichConstant::B6, WhichConstant::B7}) {
    for (double t : {2.5, 3.0, 4.0, 5.5}) {
      for (int n : {2, 3, 5, 8}) {
        const MomentProfile p = implied_profile(which, t, n);
        const double norm =
            max_normalizer(which, n, t, p.a() * p.a(), p.b());
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("implied profile coordinates") {
  const MomentProfile b4 = implied_profile(WhichConstant::B4, 3.0, 3);
  CHECK(b4.a() == doctest::Approx(std::pow(3.0, -0.25)).epsilon(1e-15));
  CHECK(b4.b() == doctest::Approx(std::pow(3.0, -0.5)).epsilon(1e-15));
  const MomentProfile b5 = implied_profile(WhichConstant::B5, 3.0, 3);
  CHECK(b5.a() == doctest::Approx(std::pow(3.0, -0.5)).epsilon(1e-15));
  CHECK(b5.b() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("normalizer takes the max of its two branches") {
  CHECK(max_normalizer(WhichConstant::B5, 2, 3.0, 1.0, 1.0) ==
        doctest::Approx(8.0).epsilon(1e-14));
  CHECK(max_normalizer(WhichConstant::B5, 2, 3.0, 0.01, 1.0) ==
        doctest::Approx(4.0).epsilon(1e-14));
  // B4 uses the pair count; n = 3 gives 3 pairs
  CHECK(max_normalizer(WhichConstant::B4, 3, 4.0, 1.0, 1.0) ==
        doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("fourth-moment route at two variables is one quarter") {
  const ConstantReport report = best_constant({WhichConstant::B5, 4.0, 2});
  CHECK(report.derived_value == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(report.literal_value == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(report.relative_gap == doctest::Approx(0.0));
  CHECK(report.regime == ConstantRegime::atleast4);
}

TEST_CASE("degenerate implied profile pins the pair-normalized constant") {
  // B4 at n = 2 has a single pair, so the implied profile is the sign law
  // and the constant is the plain chaos moment, 1
  for (double t : {2.5, 3.0, 4.0, 6.0}) {
    const ConstantReport report = best_constant({WhichConstant::B4, t, 2});
    CHECK(report.derived_value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("published display disagrees with the derived route below four") {
  const ConstantReport report = best_constant({WhichConstant::B5, 3.0, 2});
  CHECK(report.regime == ConstantRegime::below4);
  CHECK(report.derived_value == doctest::Approx(0.25).epsilon(1e-12));
  // transcription of the printed closed form
  const double cross = std::pow(2.0, -1.5) - std::pow(2.0, -3.5);
  const double literal = 0.375 * 0.375 + cross + 0.125;
  CHECK(report.literal_value == doctest::Approx(literal).epsilon(1e-13));
  CHECK(report.literal_value == doctest::Approx(0.530790042945).epsilon(1e-11));
  CHECK(report.relative_gap ==
        doctest::Approx(std::fabs(report.literal_value -
                                  report.derived_value) /
                        report.derived_value)
            .epsilon(1e-13));
}

TEST_CASE("the two routes coincide at and above four") {
  for (WhichConstant which : {WhichConstant::B4, WhichConstant::B5,
                              WhichConstant::B6, WhichConstant::B7}) {
    for (double t : {4.0, 5.0, 6.5}) {
      for (int n : {2, 3, 4}) {
        const ConstantReport report = best_constant({which, t, n});
        CHECK(report.literal_value == report.derived_value);
        CHECK(report.relative_gap == 0.0);
        CHECK(report.derived_value > 0.0);
      }
    }
  }
}

TEST_CASE("derived constants are positive and finite below four") {
  for (WhichConstant which : {WhichConstant::B4, WhichConstant::B5,
                              WhichConstant::B6, WhichConstant::B7}) {
    for (double t : {2.2, 3.0, 3.9}) {
      for (int n : {2, 3, 6}) {
        const ConstantReport report = best_constant({which, t, n});
        CHECK(report.derived_value > 0.0);
        CHECK(std::isfinite(report.derived_value));
        CHECK(std::isfinite(report.literal_value));
        CHECK(report.relative_gap >= 0.0);
      }
    }
  }
}

TEST_CASE("decoupled constants dominate their ordinary counterparts") {
  // the decoupled form has twice the terms, so its normalized supremum at
  // the shared implied profile cannot be smaller
  for (double t : {2.5, 3.0, 4.0, 5.0}) {
    for (int n : {2, 3, 4}) {
      CHECK(best_constant({WhichConstant::B6, t, n}).derived_value >=
            best_constant({WhichConstant::B4, t, n}).derived_value);
      CHECK(best_constant({WhichConstant::B7, t, n}).derived_value >=
            best_constant({WhichConstant::B5, t, n}).derived_value);
    }
  }
}

TEST_CASE("table rows are sorted and match pointwise queries") {
  const auto rows = constant_table(
      {WhichConstant::B5, WhichConstant::B4}, {4.0, 2.5}, {3, 2});
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].which == WhichConstant::B4);
  CHECK(rows[0].t == 2.5);
  CHECK(rows[0].n == 2);
  CHECK(rows[7].which == WhichConstant::B5);
  CHECK(rows[7].t == 4.0);
  CHECK(rows[7].n == 3);
  for (const auto& row : rows) {
    const ConstantReport direct = best_constant({row.which, row.t, row.n});
    CHECK(row.derived_value == direct.derived_value);
    CHECK(row.literal_value == direct.literal_value);
  }
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(best_constant({WhichConstant::B4, 2.0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(best_constant({WhichConstant::B4, 3.0, 1}),
                  std::invalid_argument);
}
