#include "rbf/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rbf/numeric.hpp"

namespace rbf {

namespace {

using Outcomes = std::vector<std::pair<double, double>>;

void check_order(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("moment order must be positive");
}

std::vector<Outcomes> outcome_tables(const std::vector<SymmetricAtomDist>& dists) {
  std::vector<Outcomes> tables;
  tables.reserve(dists.size());
  for (const auto& d : dists) tables.push_back(d.outcomes());
  return tables;
}

void check_cap(double size) {
  if (size > static_cast<double>(enumeration_cap())) {
    throw EnumerationCapError(
        "enumeration would visit " + std::to_string(size) +
        " outcomes, above the cap of " + std::to_string(enumeration_cap()) +
        " (RBF_ENUM_CAP overrides)");
  }
}

void check_form(const FormSpec& spec) {
  check_order(spec.t);
  if (spec.x.size() < 2) {
    throw std::invalid_argument("form needs at least two variables");
  }
  if (spec.kind == FormKind::decoupled && spec.y.size() != spec.x.size()) {
    throw std::invalid_argument(
        "decoupled form needs equally long x and y sequences");
  }
}

// E|sum_{i<j} U_i U_j|^t allowing k < 2, where the empty form is zero.
double chaos_ordinary_any(int k, double t) {
  if (k < 2) return 0.0;
  KahanSum acc;
  double coeff = 1.0;  // C(k, j)
  const double weight = std::ldexp(1.0, -k);
  for (int j = 0; j <= k; ++j) {
    const double s = static_cast<double>(k - 2 * j);
    acc.add(coeff * weight * abs_pow((s * s - k) / 2.0, t));
    coeff = coeff * static_cast<double>(k - j) / static_cast<double>(j + 1);
  }
  return acc.value();
}

}  // namespace

std::uint64_t enumeration_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("RBF_ENUM_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(100'000'000);
  }();
  return cap;
}

double enumeration_size(const std::vector<SymmetricAtomDist>& dists) {
  double size = 1.0;
  for (const auto& d : dists) size *= static_cast<double>(d.support_size());
  return size;
}

double moment_linear(const std::vector<SymmetricAtomDist>& dists,
                     const std::vector<double>& coeffs, double t) {
  check_order(t);
  if (dists.size() != coeffs.size()) {
    throw std::invalid_argument("one coefficient per variable");
  }
  check_cap(enumeration_size(dists));
  const auto tables = outcome_tables(dists);
  KahanSum acc;
  auto rec = [&](auto&& self, std::size_t i, double sum, double weight) -> void {
    if (i == tables.size()) {
      acc.add(weight * abs_pow(sum, t));
      return;
    }
    for (const auto& [v, p] : tables[i]) {
      self(self, i + 1, sum + coeffs[i] * v, weight * p);
    }
  };
  rec(rec, 0, 0.0, 1.0);
  return acc.value();
}

double shifted_abs_moment(const SymmetricAtomDist& x, double scale,
                          double shift, double t) {
  check_order(t);
  KahanSum acc;
  for (const auto& [v, p] : x.outcomes()) {
    acc.add(p * abs_pow(scale * v + shift, t));
  }
  return acc.value();
}

double rademacher_sum_moment(int n, double t) {
  check_order(t);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  KahanSum acc;
  double coeff = 1.0;  // C(n, k)
  const double weight = std::ldexp(1.0, -n);
  for (int k = 0; k <= n; ++k) {
    acc.add(coeff * weight * abs_pow(static_cast<double>(n - 2 * k), t));
    coeff = coeff * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  return acc.value();
}

double weighted_rademacher_sum_moment(const std::vector<double>& coeffs,
                                      double t) {
  check_order(t);
  if (coeffs.empty()) return 0.0;
  bool all_equal = true;
  const double c0 = std::fabs(coeffs.front());
  for (double c : coeffs) {
    if (std::fabs(c) != c0) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) {
    if (c0 == 0.0) return 0.0;
    return abs_pow(c0, t) *
           rademacher_sum_moment(static_cast<int>(coeffs.size()), t);
  }
  const int n = static_cast<int>(coeffs.size());
  if (n >= 63) throw EnumerationCapError("too many sign variables");
  check_cap(std::ldexp(1.0, n));
  KahanSum acc;
  auto rec = [&](auto&& self, int i, double sum) -> void {
    if (i == n) {
      acc.add(abs_pow(sum, t));
      return;
    }
    self(self, i + 1, sum + coeffs[i]);
    self(self, i + 1, sum - coeffs[i]);
  };
  rec(rec, 0, 0.0);
  return std::ldexp(acc.value(), -n);
}

double rademacher_chaos_ordinary(int n, double t) {
  check_order(t);
  if (n < 2) throw std::invalid_argument("chaos needs n >= 2");
  return chaos_ordinary_any(n, t);
}

double rademacher_chaos_decoupled(int n, double t) {
  if (n < 2) throw std::invalid_argument("chaos needs n >= 2");
  return threepoint_chaos_decoupled(n, 1.0, 1.0, 1.0, 1.0, t);
}

double threepoint_chaos_ordinary(int n, double atom_prob, double magnitude,
                                 double t) {
  check_order(t);
  if (n < 2) throw std::invalid_argument("chaos needs n >= 2");
  if (!(atom_prob >= 0.0 && atom_prob <= 1.0)) {
    throw std::invalid_argument("atom_prob outside [0, 1]");
  }
  if (magnitude < 0.0) throw std::invalid_argument("magnitude must be >= 0");
  if (magnitude == 0.0 || atom_prob == 0.0) return 0.0;
  // Condition on the number of active coordinates; the active ones form a
  // scaled Rademacher chaos.
  KahanSum acc;
  for (int k = 2; k <= n; ++k) {
    const double pk = binomial(n, k) * std::pow(atom_prob, k) *
                      std::pow(1.0 - atom_prob, n - k);
    if (pk == 0.0) continue;
    acc.add(pk * chaos_ordinary_any(k, t));
  }
  return abs_pow(magnitude, 2.0 * t) * acc.value();
}

double threepoint_chaos_decoupled(int n, double x_atom_prob,
                                  double x_magnitude, double y_atom_prob,
                                  double y_magnitude, double t) {
  check_order(t);
  if (n < 2) throw std::invalid_argument("chaos needs n >= 2");
  for (double p : {x_atom_prob, y_atom_prob}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("atom_prob outside [0, 1]");
    }
  }
  if (x_magnitude < 0.0 || y_magnitude < 0.0) {
    throw std::invalid_argument("magnitudes must be >= 0");
  }
  if (x_magnitude * y_magnitude == 0.0 || x_atom_prob * y_atom_prob == 0.0) {
    return 0.0;
  }
  // Joint lattice walk of (sx, sy, d) with d tracking sum_i x_i y_i; the form
  // value at a state is wx * wy * (sx * sy - d).
  const int span = 2 * n + 1;
  const auto idx = [&](int sx, int sy, int d) {
    return (static_cast<std::size_t>(sx + n) * span + (sy + n)) * span +
           (d + n);
  };
  std::vector<double> cur(static_cast<std::size_t>(span) * span * span, 0.0);
  std::vector<double> nxt(cur.size(), 0.0);
  cur[idx(0, 0, 0)] = 1.0;
  const double px[3] = {x_atom_prob / 2.0, 1.0 - x_atom_prob,
                        x_atom_prob / 2.0};
  const double py[3] = {y_atom_prob / 2.0, 1.0 - y_atom_prob,
                        y_atom_prob / 2.0};
  for (int step = 0; step < n; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (int sx = -step; sx <= step; ++sx) {
      for (int sy = -step; sy <= step; ++sy) {
        for (int d = -step; d <= step; ++d) {
          const double mass = cur[idx(sx, sy, d)];
          if (mass == 0.0) continue;
          for (int xi = -1; xi <= 1; ++xi) {
            const double wx = px[xi + 1];
            if (wx == 0.0) continue;
            for (int yi = -1; yi <= 1; ++yi) {
              const double wy = py[yi + 1];
              if (wy == 0.0) continue;
              nxt[idx(sx + xi, sy + yi, d + xi * yi)] += mass * wx * wy;
            }
          }
        }
      }
    }
    cur.swap(nxt);
  }
  const double scale = x_magnitude * y_magnitude;
  KahanSum acc;
  for (int sx = -n; sx <= n; ++sx) {
    for (int sy = -n; sy <= n; ++sy) {
      for (int d = -n; d <= n; ++d) {
        const double mass = cur[idx(sx, sy, d)];
        if (mass == 0.0) continue;
        acc.add(mass * abs_pow(scale * (static_cast<double>(sx) * sy - d), t));
      }
    }
  }
  return acc.value();
}

double moment_bilinear(const FormSpec& spec) {
  check_form(spec);
  const std::size_t n = spec.x.size();
  KahanSum acc;
  if (spec.kind == FormKind::ordinary) {
    check_cap(enumeration_size(spec.x));
    const auto tables = outcome_tables(spec.x);
    // pair accumulates sum_{i<j} x_i x_j incrementally.
    auto rec = [&](auto&& self, std::size_t i, double sum, double pair,
                   double weight) -> void {
      if (i == n) {
        acc.add(weight * abs_pow(pair, spec.t));
        return;
      }
      for (const auto& [v, p] : tables[i]) {
        self(self, i + 1, sum + v, pair + sum * v, weight * p);
      }
    };
    rec(rec, 0, 0.0, 0.0, 1.0);
    return acc.value();
  }
  check_cap(enumeration_size(spec.x) * enumeration_size(spec.y));
  const auto xt = outcome_tables(spec.x);
  const auto yt = outcome_tables(spec.y);
  // sum_{i!=j} x_i y_j = (sum x)(sum y) - sum_i x_i y_i.
  auto rec = [&](auto&& self, std::size_t i, double sx, double sy, double diag,
                 double weight) -> void {
    if (i == n) {
      acc.add(weight * abs_pow(sx * sy - diag, spec.t));
      return;
    }
    for (const auto& [xv, xp] : xt[i]) {
      for (const auto& [yv, yp] : yt[i]) {
        self(self, i + 1, sx + xv, sy + yv, diag + xv * yv, weight * xp * yp);
      }
    }
  };
  rec(rec, 0, 0.0, 0.0, 0.0, 1.0);
  return acc.value();
}

McEstimate mc_moment_bilinear(const FormSpec& spec, std::int64_t samples,
                              std::uint64_t seed) {
  check_form(spec);
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  const std::size_t n = spec.x.size();
  std::vector<Outcomes> tables = outcome_tables(spec.x);
  if (spec.kind == FormKind::decoupled) {
    const auto yt = outcome_tables(spec.y);
    tables.insert(tables.end(), yt.begin(), yt.end());
  }
  std::vector<Outcomes> cdf = tables;
  for (auto& table : cdf) {
    double run = 0.0;
    for (auto& [v, p] : table) {
      run += p;
      p = run;
    }
    table.back().second = 1.0;  // guard against rounding in the last bin
  }
  Rng rng(mix_seed(seed, 0x6d));
  std::vector<double> draw(cdf.size(), 0.0);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < cdf.size(); ++i) {
      const double u = rng.uniform01();
      const auto& table = cdf[i];
      double value = table.back().first;
      for (const auto& [v, cum] : table) {
        if (u < cum) {
          value = v;
          break;
        }
      }
      draw[i] = value;
    }
    double form = 0.0;
    if (spec.kind == FormKind::ordinary) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        form += sum * draw[i];
        sum += draw[i];
      }
    } else {
      double sx = 0.0, sy = 0.0, diag = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sx += draw[i];
        sy += draw[n + i];
        diag += draw[i] * draw[n + i];
      }
      form = sx * sy - diag;
    }
    const double x = abs_pow(form, spec.t);
    const double delta = x - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (x - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(variance / static_cast<double>(samples))};
}

}  // namespace rbf
