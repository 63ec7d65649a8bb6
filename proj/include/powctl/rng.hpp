#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace powctl {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream. The engine is std::mt19937_64 (fully specified
// by the standard) and all distribution transforms are implemented here, so a
// given seed yields the same sequence on every platform and standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  // Independent child stream; stable under the parent's draw position.
  RandomStream derive(std::uint64_t salt) const {
    return RandomStream(splitmix64(seed_ ^ splitmix64(salt ^ 0xa5a5a5a5a5a5a5a5ULL)));
  }

  std::uint64_t next_u64() { return eng_(); }

  // uniform on [0, 1)
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n), n >= 1; rejection keeps it unbiased
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t lim = ~0ULL - ~0ULL % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= lim);
    return x % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Box-Muller without caching the second value, so the draw count per call
  // is fixed.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  // unit-mean when rate 1
  double exponential() { return -std::log(1.0 - uniform01()); }

  // Marsaglia-Tsang squeeze; requires shape >= 1.
  double gamma(double shape, double scale) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
      const double x = normal();
      const double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      const double v = t * t * t;
      const double u = uniform01();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace powctl
