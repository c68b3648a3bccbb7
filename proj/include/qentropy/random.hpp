#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qentropy {

/// Seeded generator with deterministic stream splitting.
///
/// Rng::stream(seed, index) derives an independent engine from the pair via
/// a SplitMix64 mix, so trial `index` sees the same draws no matter which
/// thread runs it or in what order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(mix(seed)), engine_(seed_) {}

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed ^ mix(index + 0x632be59bd9b4e019ULL));
  }

  /// Child stream keyed on this generator's seed; does not advance it.
  Rng split(std::uint64_t index) const { return stream(seed_, index); }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  /// Standard complex Gaussian, E|z|^2 = 1.
  std::complex<double> complex_normal() {
    constexpr double kHalf = 0.70710678118654752440;
    const double re = normal();
    const double im = normal();
    return {kHalf * re, kHalf * im};
  }
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qentropy
