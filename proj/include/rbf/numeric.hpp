#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rbf {

// Neumaier-compensated running sum. Keeps exact-rational accumulations (dyadic
// weights times integer powers) exact and makes large enumerations insensitive
// to iteration order.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// |x|^t with |0|^t == 0. Integer exponents up to 64 take an exact
// multiply-chain path; everything else goes through std::pow.
double abs_pow(double x, double t);

// Exact for every n where the result fits a double's integer range (n <= 56).
double binomial(int n, int k);

// splitmix64 round; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 with explicit output mappings. std::uniform_real_distribution is
// not pinned down by the standard, so all mappings are spelled out here to
// keep seeded runs reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rbf
