#pragma once

#include <cstdint>
#include <cmath>

#include "acx/types.hpp"

namespace acx {

/// Deterministic splittable RNG. Streams are derived from (seed, labels...)
/// with splitmix64 mixing, so per-point / per-scale streams are independent
/// of evaluation order and thread count.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  static uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  /// Child stream labelled by `label`; independent of draws made on *this.
  Rng split(uint64_t label) const { return Rng(mix(state_ ^ mix(label))); }
  Rng split(uint64_t a, uint64_t b) const { return split(a).split(b); }

  uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    return x ^ (x >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal (Box-Muller).
  double next_normal() {
    double u = next_double(), v = next_double();
    if (u < 1e-300) u = 1e-300;
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  Complex next_complex_normal() { return {next_normal(), next_normal()}; }

  /// Uniform direction on the unit sphere of C^n (real 2n-sphere).
  CVector next_unit_vector(int n) {
    CVector v(n);
    double s = 0.0;
    do {
      for (int i = 0; i < n; ++i) v[i] = next_complex_normal();
      s = v.norm();
    } while (s < 1e-12);
    return v / s;
  }

 private:
  uint64_t state_;
};

}  // namespace acx
