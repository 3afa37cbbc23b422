#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rbf/dist.hpp"

namespace rbf {

enum class FormKind { ordinary, decoupled };

// Bilinear form in independent variables: sum_{i<j} X_i X_j (ordinary) or
// sum_{i!=j} X_i Y_j over two independent sequences (decoupled, ordered
// pairs). y is ignored for ordinary forms and must match x in length for
// decoupled ones.
struct FormSpec {
  FormKind kind = FormKind::ordinary;
  double t = 4.0;
  std::vector<SymmetricAtomDist> x;
  std::vector<SymmetricAtomDist> y;
};

// Exact enumeration was asked to visit more outcomes than the cap allows.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default 1e8 outcomes; the RBF_ENUM_CAP environment variable (read once)
// overrides it.
std::uint64_t enumeration_cap();

// Product of support sizes, as a double so it cannot overflow.
double enumeration_size(const std::vector<SymmetricAtomDist>& dists);

// E|sum_i coeffs[i] * X_i|^t by exact enumeration.
double moment_linear(const std::vector<SymmetricAtomDist>& dists,
                     const std::vector<double>& coeffs, double t);

// E|scale * X + shift|^t for a single variable.
double shifted_abs_moment(const SymmetricAtomDist& x, double scale,
                          double shift, double t);

// E|U_1 + ... + U_n|^t for i.i.d. Rademacher signs, via the binomial
// distribution of the partial sum.
double rademacher_sum_moment(int n, double t);

// E|sum_i c_i U_i|^t; binomial fast path when all |c_i| coincide, else a 2^n
// sign enumeration (subject to the cap).
double weighted_rademacher_sum_moment(const std::vector<double>& coeffs,
                                      double t);

// E|sum_{i<j} U_i U_j|^t via sum_{i<j} U_i U_j = (S^2 - n)/2 with S binomial.
double rademacher_chaos_ordinary(int n, double t);

// E|sum_{i!=j} U_i V_j|^t via dynamic programming over the joint law of
// (S_U, S_V, sum_i U_i V_i), O(n^3) states.
double rademacher_chaos_decoupled(int n, double t);

// Chaos moments for i.i.d. zero-or-+-magnitude laws (P(X != 0) = atom_prob),
// exact by conditioning on the set of active coordinates: a binomial mixture
// of Rademacher chaoses for the ordinary form, the lattice DP above extended
// with a zero state for the decoupled one.
double threepoint_chaos_ordinary(int n, double atom_prob, double magnitude,
                                 double t);
double threepoint_chaos_decoupled(int n, double x_atom_prob,
                                  double x_magnitude, double y_atom_prob,
                                  double y_magnitude, double t);

// E|form|^t by exact enumeration over the product support. Throws
// EnumerationCapError when the outcome count exceeds enumeration_cap().
double moment_bilinear(const FormSpec& spec);

struct McEstimate {
  double estimate;
  double std_error;
};

// Unbiased sample-mean estimate of E|form|^t with its standard error.
// Deterministic for a fixed seed.
McEstimate mc_moment_bilinear(const FormSpec& spec, std::int64_t samples,
                              std::uint64_t seed);

}  // namespace rbf
