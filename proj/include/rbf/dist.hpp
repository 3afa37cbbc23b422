#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rbf {

// Moment targets (a, b, t) that no symmetric law can meet.
class FeasibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// sample_member ran out of rejection rounds without a feasible atom set.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One signed pair of support points: P(X = +magnitude) = P(X = -magnitude)
// = half_prob.
struct Atom {
  double magnitude;
  double half_prob;
  bool operator==(const Atom&) const = default;
};

// Finite-support symmetric law: optional mass at zero plus signed atom pairs.
// Atoms are kept sorted by magnitude; magnitudes are pairwise distinct and
// half_probs strictly positive; zero_mass + 2 * sum(half_prob) == 1 within
// 1e-12. Odd moments vanish identically.
class SymmetricAtomDist {
 public:
  SymmetricAtomDist() : zero_mass_(1.0) {}  // point mass at zero
  SymmetricAtomDist(double zero_mass, std::vector<Atom> atoms);

  double zero_mass() const { return zero_mass_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  double second_moment() const;
  double abs_moment(double t) const;
  double max_magnitude() const;

  // Support points with probabilities: zero first (if weighted), then each
  // atom pair as -v, +v in increasing magnitude order.
  std::vector<std::pair<double, double>> outcomes() const;
  std::size_t support_size() const {
    return (zero_mass_ > 0.0 ? 1 : 0) + 2 * atoms_.size();
  }

  bool operator==(const SymmetricAtomDist&) const = default;

 private:
  double zero_mass_;
  std::vector<Atom> atoms_;
};

enum class ClassKind { M1, M2 };

// Per-coordinate moment constraints: EX^2 (= or <=) a^2 and E|X|^t (= or <=)
// b, with M1 the equality class and M2 the domination class. Feasibility
// (a >= 0, b >= 0, a^t <= b, and b = 0 when a = 0 under M1) is checked at
// construction.
class MomentProfile {
 public:
  MomentProfile(double a, double b, double t, ClassKind kind);

  double a() const { return a_; }
  double b() const { return b_; }
  double t() const { return t_; }
  ClassKind kind() const { return kind_; }

  double a_pow_t() const { return a_pow_t_; }
  // b - a^t, clamped at zero.
  double excess() const { return b_ - a_pow_t_ > 0.0 ? b_ - a_pow_t_ : 0.0; }
  // True when b == a^t up to 1e-14 relative; the class then contains only the
  // scaled Rademacher law.
  bool degenerate() const;

 private:
  double a_, b_, t_, a_pow_t_;
  ClassKind kind_;
};

// Parameters of the spread-an-epsilon construction behind make_approx.
struct ApproxParams {
  int m;
  double delta_m;     // 1/m
  double b_mk;        // far-atom magnitude, >= a
  double delta_star;  // far-pair mass, in [0, delta_m]
};

// Three-point law with EX^2 = a^2 and E|X|^t = b exactly:
// P(0) = 1 - (a^t/b)^(2/(t-2)), P(+-(b/a^2)^(1/(t-2))) split the rest evenly.
// Collapses to the scaled Rademacher when a^t = b and to the point mass at
// zero when a = 0.
SymmetricAtomDist make_extremal(double a, double b, double t);

// P(+-scale) = 1/2; point mass at zero when scale == 0.
SymmetricAtomDist make_rademacher(double scale);

// Five-point law of the approximating sequence: keeps the +-a pair at weight
// (1 - 1/m)/2 and moves the remaining t-th moment excess onto a far pair
// +-b_mk whose weight shrinks like 1/b_mk^2, so EX^2 = a^2 and E|X|^t = b
// hold exactly for every m. Requires a^t <= b; degenerate targets return the
// scaled Rademacher.
std::pair<SymmetricAtomDist, ApproxParams> make_approx(double a, double b,
                                                       double t, int m);

// (EX^2, E|X|^t).
std::pair<double, double> moments(const SymmetricAtomDist& dist, double t);

// Exact equality-class member supported on two given magnitudes (plus zero):
// solves the 2x2 moment system. Throws FeasibilityError when the system has
// no sub-probability solution, which happens unless
// v1 < (b/a^2)^(1/(t-2)) < v2.
SymmetricAtomDist member_with_magnitudes(const MomentProfile& profile,
                                         std::vector<double> magnitudes);

// Seeded random member of the profile's class supported on `magnitude_count`
// magnitudes (>= 2) plus an optional zero mass. M1 members meet both moment
// targets within 1e-10 relative; M2 members sit strictly inside the
// domination region. Identical (profile, count, seed) return identical laws.
SymmetricAtomDist sample_member(const MomentProfile& profile,
                                int magnitude_count, std::uint64_t seed);

}  // namespace rbf
