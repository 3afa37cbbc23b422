#include "rbf/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "rbf/numeric.hpp"

namespace rbf {

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::sup_2to4: return "sup_2to4";
    case Regime::inf_3to4: return "inf_3to4";
    case Regime::sup_ge4: return "sup_ge4";
    case Regime::inf_ge4: return "inf_ge4";
  }
  return "?";
}

namespace {

void check_profiles(const std::vector<MomentProfile>& profiles, double t) {
  if (profiles.size() < 2) {
    throw std::invalid_argument("bilinear bounds need n >= 2");
  }
  for (const auto& p : profiles) {
    if (p.t() != t) {
      throw std::invalid_argument("profiles must carry the call's exponent t");
    }
  }
}

std::vector<double> a_coeffs(const std::vector<MomentProfile>& profiles) {
  std::vector<double> a;
  a.reserve(profiles.size());
  for (const auto& p : profiles) a.push_back(p.a());
  return a;
}

bool all_same_targets(const std::vector<MomentProfile>& profiles) {
  for (const auto& p : profiles) {
    if (p.a() != profiles.front().a() || p.b() != profiles.front().b()) {
      return false;
    }
  }
  return true;
}

SymmetricAtomDist extremal_of(const MomentProfile& p) {
  // M2 profiles with a = 0 admit only the zero law; the three-point
  // constructor is never called with them.
  if (p.a() == 0.0) return SymmetricAtomDist();
  return make_extremal(p.a(), p.b(), p.t());
}

double atom_prob(const SymmetricAtomDist& d) {
  double p = 0.0;
  for (const auto& atom : d.atoms()) p += 2.0 * atom.half_prob;
  return p;
}

// E|sum_i c_i U_i|^t over signs, dropping index `skip`.
double cross_moment_excluding(const std::vector<double>& coeffs,
                              std::size_t skip, double t) {
  std::vector<double> rest;
  rest.reserve(coeffs.size() - 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j != skip) rest.push_back(coeffs[j]);
  }
  return weighted_rademacher_sum_moment(rest, t);
}

double sign_chaos_ordinary(const std::vector<double>& a, double t) {
  bool all_equal = true;
  for (double c : a) all_equal = all_equal && c == a.front();
  if (all_equal) {
    if (a.front() == 0.0) return 0.0;
    return abs_pow(a.front(), 2.0 * t) *
           rademacher_chaos_ordinary(static_cast<int>(a.size()), t);
  }
  FormSpec spec{FormKind::ordinary, t, {}, {}};
  spec.x.reserve(a.size());
  for (double c : a) spec.x.push_back(make_rademacher(c));
  return moment_bilinear(spec);
}

double sign_chaos_decoupled(const std::vector<double>& a,
                            const std::vector<double>& c, double t) {
  bool all_equal = true;
  for (double v : a) all_equal = all_equal && v == a.front();
  for (double v : c) all_equal = all_equal && v == c.front();
  if (all_equal) {
    if (a.front() == 0.0 || c.front() == 0.0) return 0.0;
    return threepoint_chaos_decoupled(static_cast<int>(a.size()), 1.0,
                                      a.front(), 1.0, c.front(), t);
  }
  FormSpec spec{FormKind::decoupled, t, {}, {}};
  for (double v : a) spec.x.push_back(make_rademacher(v));
  for (double v : c) spec.y.push_back(make_rademacher(v));
  return moment_bilinear(spec);
}

// sum_{i<j} (b_i - a_i^t)(b_j - a_j^t)
//   + sum_i (b_i - a_i^t) E|sum_{j!=i} a_j U_j|^t
//   + E|sum_{i<j} a_i a_j U_i U_j|^t
TermBreakdown additive_ordinary(const std::vector<MomentProfile>& profiles,
                                double t) {
  const std::size_t n = profiles.size();
  const auto a = a_coeffs(profiles);
  TermBreakdown terms;
  KahanSum product;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      product.add(profiles[i].excess() * profiles[j].excess());
    }
  }
  terms.product_term = product.value();
  KahanSum cross;
  for (std::size_t i = 0; i < n; ++i) {
    const double excess = profiles[i].excess();
    if (excess == 0.0) continue;
    cross.add(excess * cross_moment_excluding(a, i, t));
  }
  terms.cross_terms = cross.value();
  terms.chaos_term = sign_chaos_ordinary(a, t);
  return terms;
}

// Decoupled analogue over ordered pairs i != j, with one excess-weighted
// linear moment per sequence.
TermBreakdown additive_decoupled(const std::vector<MomentProfile>& xp,
                                 const std::vector<MomentProfile>& yp,
                                 double t) {
  const std::size_t n = xp.size();
  const auto a = a_coeffs(xp);
  const auto c = a_coeffs(yp);
  TermBreakdown terms;
  KahanSum product;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      product.add(xp[i].excess() * yp[j].excess());
    }
  }
  terms.product_term = product.value();
  KahanSum cross;
  for (std::size_t j = 0; j < n; ++j) {
    const double excess = yp[j].excess();
    if (excess == 0.0) continue;
    cross.add(excess * cross_moment_excluding(a, j, t));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double excess = xp[i].excess();
    if (excess == 0.0) continue;
    cross.add(excess * cross_moment_excluding(c, i, t));
  }
  terms.cross_terms = cross.value();
  terms.chaos_term = sign_chaos_decoupled(a, c, t);
  return terms;
}

double extremal_chaos_ordinary(const std::vector<MomentProfile>& profiles,
                               double t) {
  const int n = static_cast<int>(profiles.size());
  if (all_same_targets(profiles)) {
    const SymmetricAtomDist law = extremal_of(profiles.front());
    if (law.atoms().empty()) return 0.0;
    return threepoint_chaos_ordinary(n, atom_prob(law), law.max_magnitude(),
                                     t);
  }
  FormSpec spec{FormKind::ordinary, t, {}, {}};
  spec.x.reserve(profiles.size());
  for (const auto& p : profiles) spec.x.push_back(extremal_of(p));
  return moment_bilinear(spec);
}

double extremal_chaos_decoupled(const std::vector<MomentProfile>& xp,
                                const std::vector<MomentProfile>& yp,
                                double t) {
  const int n = static_cast<int>(xp.size());
  if (all_same_targets(xp) && all_same_targets(yp)) {
    const SymmetricAtomDist xlaw = extremal_of(xp.front());
    const SymmetricAtomDist ylaw = extremal_of(yp.front());
    if (xlaw.atoms().empty() || ylaw.atoms().empty()) return 0.0;
    return threepoint_chaos_decoupled(n, atom_prob(xlaw),
                                      xlaw.max_magnitude(), atom_prob(ylaw),
                                      ylaw.max_magnitude(), t);
  }
  FormSpec spec{FormKind::decoupled, t, {}, {}};
  for (const auto& p : xp) spec.x.push_back(extremal_of(p));
  for (const auto& p : yp) spec.y.push_back(extremal_of(p));
  return moment_bilinear(spec);
}

double total(const TermBreakdown& terms) {
  KahanSum s;
  s.add(terms.product_term);
  s.add(terms.cross_terms);
  s.add(terms.chaos_term);
  return s.value();
}

BoundReport report_additive(TermBreakdown terms, Regime regime,
                            FormKind kind) {
  return {total(terms), terms, regime, kind};
}

BoundReport report_chaos(double value, Regime regime, FormKind kind) {
  return {value, {0.0, 0.0, value}, regime, kind};
}

void check_inf_class(const std::vector<MomentProfile>& profiles) {
  for (const auto& p : profiles) {
    if (p.kind() != ClassKind::M1) {
      throw std::domain_error(
          "infimum is defined over the equality class only");
    }
  }
}

void check_sup_exponent(double t) {
  if (!(t > 2.0)) {
    throw std::domain_error("supremum bound needs t > 2");
  }
}

void check_inf_exponent(double t) {
  if (!(t >= 3.0)) {
    throw std::domain_error("no infimum formula for 2 < t < 3");
  }
}

}  // namespace

BoundReport sup_ordinary(const std::vector<MomentProfile>& profiles,
                         double t) {
  check_sup_exponent(t);
  check_profiles(profiles, t);
  if (t < 4.0) {
    return report_additive(additive_ordinary(profiles, t), Regime::sup_2to4,
                           FormKind::ordinary);
  }
  return report_chaos(extremal_chaos_ordinary(profiles, t), Regime::sup_ge4,
                      FormKind::ordinary);
}

BoundReport inf_ordinary(const std::vector<MomentProfile>& profiles,
                         double t) {
  check_inf_exponent(t);
  check_profiles(profiles, t);
  check_inf_class(profiles);
  if (t < 4.0) {
    return report_chaos(extremal_chaos_ordinary(profiles, t), Regime::inf_3to4,
                        FormKind::ordinary);
  }
  return report_additive(additive_ordinary(profiles, t), Regime::inf_ge4,
                         FormKind::ordinary);
}

BoundReport sup_decoupled(const std::vector<MomentProfile>& x_profiles,
                          const std::vector<MomentProfile>& y_profiles,
                          double t) {
  check_sup_exponent(t);
  check_profiles(x_profiles, t);
  check_profiles(y_profiles, t);
  if (x_profiles.size() != y_profiles.size()) {
    throw std::invalid_argument("profile lists must have equal length");
  }
  if (t < 4.0) {
    return report_additive(additive_decoupled(x_profiles, y_profiles, t),
                           Regime::sup_2to4, FormKind::decoupled);
  }
  return report_chaos(extremal_chaos_decoupled(x_profiles, y_profiles, t),
                      Regime::sup_ge4, FormKind::decoupled);
}

BoundReport inf_decoupled(const std::vector<MomentProfile>& x_profiles,
                          const std::vector<MomentProfile>& y_profiles,
                          double t) {
  check_inf_exponent(t);
  check_profiles(x_profiles, t);
  check_profiles(y_profiles, t);
  if (x_profiles.size() != y_profiles.size()) {
    throw std::invalid_argument("profile lists must have equal length");
  }
  check_inf_class(x_profiles);
  check_inf_class(y_profiles);
  if (t < 4.0) {
    return report_chaos(extremal_chaos_decoupled(x_profiles, y_profiles, t),
                        Regime::inf_3to4, FormKind::decoupled);
  }
  return report_additive(additive_decoupled(x_profiles, y_profiles, t),
                         Regime::inf_ge4, FormKind::decoupled);
}

}  // namespace rbf
