#include "rbf/numeric.hpp"

namespace rbf {

double abs_pow(double x, double t) {
  const double ax = std::fabs(x);
  if (ax == 0.0) return 0.0;
  double ipart;
  if (std::modf(t, &ipart) == 0.0 && t >= 0.0 && t <= 64.0) {
    auto e = static_cast<unsigned>(t);
    double base = ax;
    double r = 1.0;
    while (e != 0) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }
  return std::pow(ax, t);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return c;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rbf
