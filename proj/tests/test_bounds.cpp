#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rbf/bounds.hpp"
#include "rbf/moments.hpp"
#include "rbf/numeric.hpp"

using namespace rbf;

namespace {

std::vector<MomentProfile> iid(int n, double a, double b, double t,
                               ClassKind kind = ClassKind::M1) {
  return std::vector<MomentProfile>(static_cast<std::size_t>(n),
                                    MomentProfile(a, b, t, kind));
}

std::vector<MomentProfile> profiles_of(const std::vector<double>& a,
                                       const std::vector<double>& b, double t,
                                       ClassKind kind = ClassKind::M1) {
  std::vector<MomentProfile> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.emplace_back(a[i], b[i], t, kind);
  }
  return out;
}

bool close(double x, double y, double rel) {
  return std::fabs(x - y) <= rel * std::max({1.0, std::fabs(x), std::fabs(y)});
}

}  // namespace

TEST_CASE("two-variable ordinary bound at a worked example") {
  const auto profiles = profiles_of({1.0, 1.0}, {2.0, 2.0}, 3.0);
  const BoundReport sup = sup_ordinary(profiles, 3.0);
  CHECK(sup.value == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(sup.regime == Regime::sup_2to4);
  CHECK(sup.terms.product_term == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sup.terms.cross_terms == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sup.terms.chaos_term == doctest::Approx(1.0).epsilon(1e-14));

  const BoundReport inf3 = inf_ordinary(profiles, 3.0);
  CHECK(inf3.value == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(inf3.regime == Regime::inf_3to4);

  const auto profiles4 = profiles_of({1.0, 1.0}, {2.0, 2.0}, 4.0);
  const BoundReport inf4 = inf_ordinary(profiles4, 4.0);
  CHECK(inf4.value == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(inf4.regime == Regime::inf_ge4);
}

TEST_CASE("two-variable ordinary bounds factorize into b1 b2") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const double t = rng.uniform(2.1, 7.0);
    const double a1 = rng.log_uniform(0.3, 3.0);
    const double a2 = rng.log_uniform(0.3, 3.0);
    const double b1 = std::pow(a1, t) * (1.0 + rng.log_uniform(1e-3, 30.0));
    const double b2 = std::pow(a2, t) * (1.0 + rng.log_uniform(1e-3, 30.0));
    const auto profiles = profiles_of({a1, a2}, {b1, b2}, t);
    CHECK(close(sup_ordinary(profiles, t).value, b1 * b2, 1e-11));
    if (t >= 3.0) {
      CHECK(close(inf_ordinary(profiles, t).value, b1 * b2, 1e-11));
    }
  }
}

TEST_CASE("degenerate profiles reduce to the sign chaos") {
  const auto unit = iid(3, 1.0, 1.0, 3.0);
  const BoundReport sup = sup_ordinary(unit, 3.0);
  CHECK(sup.value == doctest::Approx(7.5).epsilon(1e-14));
  CHECK(sup.terms.product_term == 0.0);
  CHECK(sup.terms.cross_terms == 0.0);
  // scaled: X_i = s U_i multiplies the bound by s^(2t)
  const double s = 1.7;
  const auto scaled = iid(3, s, std::pow(s, 3.0), 3.0);
  CHECK(sup_ordinary(scaled, 3.0).value ==
        doctest::Approx(7.5 * std::pow(s, 6.0)).epsilon(1e-12));
}

TEST_CASE("decoupled additive bound at a worked example") {
  const auto profiles = profiles_of({1.0, 1.0}, {2.0, 2.0}, 3.0);
  const BoundReport sup = sup_decoupled(profiles, profiles, 3.0);
  CHECK(sup.value == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(sup.terms.product_term == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sup.terms.cross_terms == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(sup.terms.chaos_term == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("value always equals the sum of the three terms") {
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const double t = rng.uniform(2.1, 6.5);
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<double> a, b;
    for (int j = 0; j < n; ++j) {
      a.push_back(rng.log_uniform(0.4, 2.5));
      b.push_back(std::pow(a.back(), t) *
                  (1.0 + rng.log_uniform(1e-2, 20.0)));
    }
    const auto profiles = profiles_of(a, b, t);
    for (const BoundReport& r :
         {sup_ordinary(profiles, t), sup_decoupled(profiles, profiles, t)}) {
      CHECK(close(r.value,
                  r.terms.product_term + r.terms.cross_terms +
                      r.terms.chaos_term,
                  1e-13));
    }
    if (t >= 3.0) {
      for (const BoundReport& r :
           {inf_ordinary(profiles, t), inf_decoupled(profiles, profiles, t)}) {
        CHECK(close(r.value,
                    r.terms.product_term + r.terms.cross_terms +
                        r.terms.chaos_term,
                    1e-13));
      }
    }
  }
}

TEST_CASE("bounds are invariant under profile permutation") {
  Rng rng(29);
  const double t = 3.3;
  std::vector<double> a = {0.5, 1.0, 1.5, 0.8}, b;
  for (double ai : a) b.push_back(std::pow(ai, t) * 3.0);
  auto profiles = profiles_of(a, b, t);
  const double sup0 = sup_ordinary(profiles, t).value;
  const double inf0 = inf_ordinary(profiles, t).value;
  const double dec0 = sup_decoupled(profiles, profiles, t).value;
  for (int i = 0; i < 5; ++i) {
    std::shuffle(profiles.begin(), profiles.end(),
                 std::mt19937(rng.next()));
    CHECK(close(sup_ordinary(profiles, t).value, sup0, 1e-12));
    CHECK(close(inf_ordinary(profiles, t).value, inf0, 1e-12));
    CHECK(close(sup_decoupled(profiles, profiles, t).value, dec0, 1e-12));
  }
}

TEST_CASE("supremum grows with the t-th moment budget") {
  for (double t : {2.5, 3.5, 4.0, 5.0}) {
    const auto lo = iid(3, 1.0, 2.0, t);
    const auto hi = iid(3, 1.0, 2.5, t);
    CHECK(sup_ordinary(hi, t).value > sup_ordinary(lo, t).value);
    CHECK(sup_decoupled(hi, hi, t).value > sup_decoupled(lo, lo, t).value);
  }
}

TEST_CASE("scaling covariance of the closed forms") {
  const double lambda = 1.9;
  for (double t : {2.7, 3.4, 4.0, 5.2}) {
    std::vector<double> a = {0.6, 1.1, 1.4}, b, sa, sb;
    for (double ai : a) b.push_back(std::pow(ai, t) * 4.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa.push_back(lambda * a[i]);
      sb.push_back(std::pow(lambda, t) * b[i]);
    }
    const double factor = std::pow(lambda, 2.0 * t);
    const auto base = profiles_of(a, b, t);
    const auto scaled = profiles_of(sa, sb, t);
    CHECK(close(sup_ordinary(scaled, t).value,
                factor * sup_ordinary(base, t).value, 1e-11));
    if (t >= 3.0) {
      CHECK(close(inf_ordinary(scaled, t).value,
                  factor * inf_ordinary(base, t).value, 1e-11));
    }
    CHECK(close(sup_decoupled(scaled, scaled, t).value,
                factor * sup_decoupled(base, base, t).value, 1e-11));
  }
}

TEST_CASE("sup dominates inf wherever both exist") {
  Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const double t = rng.uniform(3.0, 6.0);
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<double> a, b;
    for (int j = 0; j < n; ++j) {
      a.push_back(rng.log_uniform(0.4, 2.0));
      b.push_back(std::pow(a.back(), t) * (1.0 + rng.log_uniform(0.01, 10.0)));
    }
    const auto profiles = profiles_of(a, b, t);
    CHECK(sup_ordinary(profiles, t).value >=
          inf_ordinary(profiles, t).value * (1.0 - 1e-12));
    CHECK(sup_decoupled(profiles, profiles, t).value >=
          inf_decoupled(profiles, profiles, t).value * (1.0 - 1e-12));
  }
}

TEST_CASE("degenerate classes pin sup and inf together") {
  for (double t : {3.0, 3.5, 4.0, 5.0}) {
    const auto profiles = profiles_of({0.7, 1.0, 1.3},
                                      {std::pow(0.7, t), 1.0, std::pow(1.3, t)},
                                      t);
    const double sup = sup_ordinary(profiles, t).value;
    const double inf = inf_ordinary(profiles, t).value;
    CHECK(close(sup, inf, 1e-12));
    const double dsup = sup_decoupled(profiles, profiles, t).value;
    const double dinf = inf_decoupled(profiles, profiles, t).value;
    CHECK(close(dsup, dinf, 1e-12));
  }
}

TEST_CASE("regime selection across the exponent range") {
  const auto p25 = iid(2, 1.0, 2.0, 2.5);
  const auto p35 = iid(2, 1.0, 2.0, 3.5);
  const auto p4 = iid(2, 1.0, 2.0, 4.0);
  const auto p6 = iid(2, 1.0, 2.0, 6.0);
  CHECK(sup_ordinary(p25, 2.5).regime == Regime::sup_2to4);
  CHECK(sup_ordinary(p4, 4.0).regime == Regime::sup_ge4);
  CHECK(sup_ordinary(p6, 6.0).regime == Regime::sup_ge4);
  CHECK(inf_ordinary(p35, 3.5).regime == Regime::inf_3to4);
  CHECK(inf_ordinary(p4, 4.0).regime == Regime::inf_ge4);
  CHECK(std::string(regime_name(Regime::sup_2to4)) == "sup_2to4");
}

TEST_CASE("domain errors for unsupported requests") {
  const auto p25 = iid(2, 1.0, 2.0, 2.5);
  CHECK_THROWS_AS(inf_ordinary(p25, 2.5), std::domain_error);
  CHECK_THROWS_AS(inf_decoupled(p25, p25, 2.5), std::domain_error);
  const auto m2 = iid(2, 1.0, 2.0, 3.5, ClassKind::M2);
  CHECK_THROWS_AS(inf_ordinary(m2, 3.5), std::domain_error);
  const auto p35 = iid(2, 1.0, 2.0, 3.5);
  CHECK_THROWS_AS(sup_ordinary(p35, 2.0), std::domain_error);
  CHECK_THROWS_AS(sup_ordinary({p35[0]}, 3.5), std::invalid_argument);
  CHECK_THROWS_AS(sup_decoupled(p35, iid(3, 1.0, 2.0, 3.5), 3.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(sup_ordinary(p35, 3.4), std::invalid_argument);
}

TEST_CASE("chaos regimes are attained exactly by the extremal laws") {
  std::vector<double> a = {0.8, 1.0, 1.2}, b;
  for (double ai : a) b.push_back(std::pow(ai, 5.0) * 2.5);
  const auto profiles = profiles_of(a, b, 5.0);
  std::vector<SymmetricAtomDist> laws;
  for (std::size_t i = 0; i < a.size(); ++i) {
    laws.push_back(make_extremal(a[i], b[i], 5.0));
  }
  FormSpec spec;
  spec.kind = FormKind::ordinary;
  spec.t = 5.0;
  spec.x = laws;
  CHECK(close(sup_ordinary(profiles, 5.0).value, moment_bilinear(spec),
              1e-11));
  spec.kind = FormKind::decoupled;
  spec.y = laws;
  CHECK(close(sup_decoupled(profiles, profiles, 5.0).value,
              moment_bilinear(spec), 1e-11));

  // identical coordinates exercise the conditioning fast path; compare it
  // against plain enumeration of the same extremal law
  const auto same = iid(4, 1.0, 2.0, 5.0);
  std::vector<SymmetricAtomDist> same_laws(4, make_extremal(1.0, 2.0, 5.0));
  FormSpec same_spec;
  same_spec.kind = FormKind::ordinary;
  same_spec.t = 5.0;
  same_spec.x = same_laws;
  CHECK(close(sup_ordinary(same, 5.0).value, moment_bilinear(same_spec),
              1e-11));
  same_spec.kind = FormKind::decoupled;
  same_spec.y = same_laws;
  CHECK(close(sup_decoupled(same, same, 5.0).value,
              moment_bilinear(same_spec), 1e-11));
}

TEST_CASE("additive infimum equals the sign chaos enumeration at t = 4") {
  // at t >= 4 the infimum is additive; for degenerate profiles it must agree
  // with the enumerated chaos moment of the sign laws
  const auto profiles = iid(4, 1.0, 1.0, 4.0);
  std::vector<SymmetricAtomDist> laws(4, make_rademacher(1.0));
  FormSpec spec;
  spec.kind = FormKind::ordinary;
  spec.t = 4.0;
  spec.x = laws;
  CHECK(close(inf_ordinary(profiles, 4.0).value, moment_bilinear(spec),
              1e-12));
}

TEST_CASE("zero second moment profiles are allowed on the sup side") {
  // an M2 profile with a = 0 contributes nothing
  const std::vector<MomentProfile> profiles = {
      MomentProfile(1.0, 2.0, 3.0, ClassKind::M2),
      MomentProfile(0.0, 0.0, 3.0, ClassKind::M2),
      MomentProfile(1.0, 2.0, 3.0, ClassKind::M2),
  };
  const double with_zero = sup_ordinary(profiles, 3.0).value;
  const double without =
      sup_ordinary(profiles_of({1.0, 1.0}, {2.0, 2.0}, 3.0,
                               ClassKind::M2),
                   3.0)
          .value;
  CHECK(close(with_zero, without, 1e-12));
}
