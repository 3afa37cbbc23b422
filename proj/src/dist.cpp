#include "rbf/dist.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rbf/numeric.hpp"

namespace rbf {

namespace {

constexpr double kMassTol = 1e-12;
// Relative width below which b - a^t is treated as exactly zero and the
// class collapses to the scaled Rademacher law.
constexpr double kDegenerateTol = 1e-14;

void require(bool ok, const char* message) {
  if (!ok) throw FeasibilityError(message);
}

void check_exponent(double t) {
  if (!(t > 2.0)) throw std::invalid_argument("moment exponent t must be > 2");
}

bool targets_degenerate(double b, double a_pow_t) {
  return b - a_pow_t <= kDegenerateTol * b;
}

void check_targets(double a, double b, double t) {
  check_exponent(t);
  require(a >= 0.0 && b >= 0.0, "moment targets must be nonnegative");
  if (a == 0.0) {
    require(b == 0.0, "a = 0 forces b = 0: EX^2 = 0 only for the zero law");
    return;
  }
  require(std::pow(a, t) <= b * (1.0 + kMassTol),
          "infeasible targets: a^t > b contradicts Jensen");
}

}  // namespace

SymmetricAtomDist::SymmetricAtomDist(double zero_mass, std::vector<Atom> atoms)
    : zero_mass_(zero_mass), atoms_(std::move(atoms)) {
  if (!(zero_mass_ >= 0.0 && zero_mass_ <= 1.0 + kMassTol)) {
    throw std::invalid_argument("zero_mass outside [0, 1]");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& l, const Atom& r) { return l.magnitude < r.magnitude; });
  double total = zero_mass_;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!(atoms_[i].magnitude > 0.0)) {
      throw std::invalid_argument("atom magnitudes must be positive");
    }
    if (!(atoms_[i].half_prob > 0.0)) {
      throw std::invalid_argument("atom half_probs must be positive");
    }
    if (i > 0 && atoms_[i].magnitude == atoms_[i - 1].magnitude) {
      throw std::invalid_argument("atom magnitudes must be pairwise distinct");
    }
    total += 2.0 * atoms_[i].half_prob;
  }
  if (std::fabs(total - 1.0) > kMassTol) {
    throw std::invalid_argument("probabilities must sum to one");
  }
}

double SymmetricAtomDist::second_moment() const {
  KahanSum s;
  for (const Atom& atom : atoms_) {
    s.add(2.0 * atom.half_prob * atom.magnitude * atom.magnitude);
  }
  return s.value();
}

double SymmetricAtomDist::abs_moment(double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("moment order must be positive");
  KahanSum s;
  for (const Atom& atom : atoms_) {
    s.add(2.0 * atom.half_prob * abs_pow(atom.magnitude, t));
  }
  return s.value();
}

double SymmetricAtomDist::max_magnitude() const {
  return atoms_.empty() ? 0.0 : atoms_.back().magnitude;
}

std::vector<std::pair<double, double>> SymmetricAtomDist::outcomes() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(support_size());
  if (zero_mass_ > 0.0) out.emplace_back(0.0, zero_mass_);
  for (const Atom& atom : atoms_) {
    out.emplace_back(-atom.magnitude, atom.half_prob);
    out.emplace_back(atom.magnitude, atom.half_prob);
  }
  return out;
}

MomentProfile::MomentProfile(double a, double b, double t, ClassKind kind)
    : a_(a), b_(b), t_(t), kind_(kind) {
  check_exponent(t);
  require(a >= 0.0 && b >= 0.0, "profile targets must be nonnegative");
  a_pow_t_ = a == 0.0 ? 0.0 : std::pow(a, t);
  if (a == 0.0 && kind == ClassKind::M1) {
    require(b == 0.0, "M1 profile with a = 0 requires b = 0");
  }
  require(a_pow_t_ <= b_ * (1.0 + kMassTol) || (a_ == 0.0 && b_ == 0.0),
          "infeasible profile: a^t > b contradicts Jensen");
}

bool MomentProfile::degenerate() const {
  if (b_ == 0.0) return true;
  return targets_degenerate(b_, a_pow_t_);
}

SymmetricAtomDist make_extremal(double a, double b, double t) {
  check_targets(a, b, t);
  if (a == 0.0) return SymmetricAtomDist();
  const double a_pow_t = std::pow(a, t);
  if (targets_degenerate(b, a_pow_t)) return make_rademacher(a);
  // log of the atom-pair mass (a^t/b)^(2/(t-2)), computed in log space so
  // near-degenerate targets keep full precision.
  const double log_pair = (2.0 / (t - 2.0)) * (t * std::log(a) - std::log(b));
  const double pair_mass = std::exp(log_pair);
  const double zero_mass = -std::expm1(log_pair);
  const double magnitude =
      std::exp((std::log(b) - 2.0 * std::log(a)) / (t - 2.0));
  return SymmetricAtomDist(zero_mass, {{magnitude, pair_mass / 2.0}});
}

SymmetricAtomDist make_rademacher(double scale) {
  if (scale < 0.0) throw std::invalid_argument("scale must be nonnegative");
  if (scale == 0.0) return SymmetricAtomDist();
  return SymmetricAtomDist(0.0, {{scale, 0.5}});
}

std::pair<SymmetricAtomDist, ApproxParams> make_approx(double a, double b,
                                                       double t, int m) {
  check_targets(a, b, t);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const double delta = 1.0 / m;
  if (a == 0.0 || targets_degenerate(b, std::pow(a, t))) {
    return {make_rademacher(a), ApproxParams{m, delta, a, delta}};
  }
  const double a_pow_t = std::pow(a, t);
  // b_mk^(t-2), chosen so the far pair carries exactly the excess t-th moment.
  const double base = (b - a_pow_t * (1.0 - delta)) / (a * a * delta);
  const double b_mk = std::pow(base, 1.0 / (t - 2.0));
  const double delta_star = a * a * delta / (b_mk * b_mk);
  double zero_mass = delta - delta_star;
  if (zero_mass < 0.0) zero_mass = 0.0;
  std::vector<Atom> atoms;
  if (m > 1) atoms.push_back({a, (1.0 - delta) / 2.0});
  atoms.push_back({b_mk, delta_star / 2.0});
  return {SymmetricAtomDist(zero_mass, std::move(atoms)),
          ApproxParams{m, delta, b_mk, delta_star}};
}

std::pair<double, double> moments(const SymmetricAtomDist& dist, double t) {
  return {dist.second_moment(), dist.abs_moment(t)};
}

namespace {

struct PairSolution {
  double pair1 = 0.0;  // full +- pair mass at v1
  double pair2 = 0.0;
  bool feasible = false;
};

// Solve p1 v1^2 + p2 v2^2 = A, p1 v1^t + p2 v2^t = B for the pair masses.
// budget is the probability mass still available for the two pairs.
PairSolution solve_pair(double v1, double v2, double A, double B, double t,
                        double budget = 1.0) {
  PairSolution s;
  if (!(v1 > 0.0) || !(v2 > v1)) return s;
  const double w1 = std::pow(v1, t - 2.0);
  const double w2 = std::pow(v2, t - 2.0);
  const double denom = w2 - w1;
  if (!(denom > 0.0)) return s;
  s.pair1 = (A * w2 - B) / (v1 * v1 * denom);
  s.pair2 = (B - A * w1) / (v2 * v2 * denom);
  s.feasible = s.pair1 > 0.0 && s.pair2 > 0.0 &&
               s.pair1 + s.pair2 <= budget + kMassTol;
  return s;
}

SymmetricAtomDist dist_from_pairs(double v1, double v2, const PairSolution& s,
                                  const std::vector<Atom>& extras) {
  std::vector<Atom> atoms = extras;
  atoms.push_back({v1, s.pair1 / 2.0});
  atoms.push_back({v2, s.pair2 / 2.0});
  double mass = s.pair1 + s.pair2;
  for (const Atom& atom : extras) mass += 2.0 * atom.half_prob;
  double zero_mass = 1.0 - mass;
  if (zero_mass < 0.0) zero_mass = 0.0;
  return SymmetricAtomDist(zero_mass, std::move(atoms));
}

bool moments_match(const SymmetricAtomDist& dist, double a, double b,
                   double t) {
  const auto [m2, mt] = moments(dist, t);
  return std::fabs(m2 - a * a) <= 1e-10 * std::max(1.0, a * a) &&
         std::fabs(mt - b) <= 1e-10 * std::max(1.0, b);
}

SymmetricAtomDist sample_equality_member(double a, double b, double t,
                                         int count, Rng& rng) {
  // Any two-magnitude solution needs one magnitude on each side of the
  // extremal magnitude, so the pivots are drawn from the two subranges
  // directly and rejection only handles the mass constraint and extras.
  const double wstar = std::pow(b / (a * a), 1.0 / (t - 2.0));
  const double lo = a / 4.0;
  const double hi =
      4.0 * std::max(std::max(a, std::pow(b, 1.0 / t)), wstar);
  for (int round = 0; round < 160; ++round) {
    const double v1 = rng.log_uniform(lo, wstar * (1.0 - 1e-9));
    const double v2 = rng.log_uniform(wstar * (1.0 + 1e-9), hi);
    double A = a * a;
    double B = b;
    double extras_mass = 0.0;
    std::vector<Atom> extras;
    bool extras_ok = true;
    for (int j = 2; j < count; ++j) {
      const double v = rng.log_uniform(lo, hi);
      const double mass = rng.uniform(0.0, 0.2 / (count - 2));
      if (std::fabs(v - v1) < 1e-9 * v1 || std::fabs(v - v2) < 1e-9 * v2) {
        extras_ok = false;
        break;
      }
      for (const Atom& atom : extras) {
        if (std::fabs(v - atom.magnitude) < 1e-9 * atom.magnitude) {
          extras_ok = false;
          break;
        }
      }
      if (!extras_ok) break;
      extras.push_back({v, mass / 2.0});
      extras_mass += mass;
      A -= mass * v * v;
      B -= mass * std::pow(v, t);
    }
    if (!extras_ok || A <= 0.0 || B <= 0.0) continue;
    // The residual targets must still bracket: v1^(t-2) < B/A < v2^(t-2).
    const PairSolution s = solve_pair(v1, v2, A, B, t, 1.0 - extras_mass);
    if (!s.feasible) continue;
    SymmetricAtomDist dist = dist_from_pairs(v1, v2, s, extras);
    if (!moments_match(dist, a, b, t)) continue;
    return dist;
  }
  // The approximating law at a random m is always an exact member.
  const int m = 2 + static_cast<int>(rng.below(199));
  SymmetricAtomDist dist = make_approx(a, b, t, m).first;
  if (!moments_match(dist, a, b, t)) {
    throw SamplingError("no feasible atom set found; retry with another seed");
  }
  return dist;
}

}  // namespace

SymmetricAtomDist member_with_magnitudes(const MomentProfile& profile,
                                         std::vector<double> magnitudes) {
  if (magnitudes.size() != 2) {
    throw std::invalid_argument("member_with_magnitudes takes two magnitudes");
  }
  std::sort(magnitudes.begin(), magnitudes.end());
  const PairSolution s =
      solve_pair(magnitudes[0], magnitudes[1], profile.a() * profile.a(),
                 profile.b(), profile.t());
  if (!s.feasible) {
    throw FeasibilityError(
        "magnitudes admit no sub-probability solution for these targets");
  }
  return dist_from_pairs(magnitudes[0], magnitudes[1], s, {});
}

SymmetricAtomDist sample_member(const MomentProfile& profile,
                                int magnitude_count, std::uint64_t seed) {
  if (magnitude_count < 2) {
    throw std::invalid_argument("magnitude_count must be >= 2");
  }
  Rng rng(mix_seed(seed, 0x9d));
  if (profile.kind() == ClassKind::M1) {
    if (profile.a() == 0.0) return SymmetricAtomDist();
    if (profile.degenerate()) return make_rademacher(profile.a());
    return sample_equality_member(profile.a(), profile.b(), profile.t(),
                                  magnitude_count, rng);
  }
  // M2: shrink both targets strictly inside the domination region, then emit
  // an equality member of the shrunken class.
  if (profile.a() == 0.0) return SymmetricAtomDist();
  const double a = profile.a() * rng.log_uniform(0.4, 1.0);
  const double a_pow_t = std::pow(a, profile.t());
  const double b =
      a_pow_t + rng.uniform(0.05, 0.95) * (profile.b() - a_pow_t);
  if (b - a_pow_t <= 1e-3 * b) return make_rademacher(a);
  return sample_equality_member(a, b, profile.t(), magnitude_count, rng);
}

}  // namespace rbf
