#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <random>

namespace skewtrace {

/// SplitMix64 finaliser; used to derive independent stream keys.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded random source: std::mt19937_64 keyed through SplitMix64.
///
/// Streams are addressed by (seed, stream index); two distinct indices give
/// statistically independent engines, so trial i of a campaign draws from
/// Rng::stream(seed, i) regardless of which thread runs it. Uniform and
/// Gaussian variates are derived from raw 64-bit outputs here instead of
/// the <random> distributions, whose algorithms are implementation-defined,
/// so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(splitmix64(index) + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform_open_zero() { return 1.0 - uniform(); }

  /// Uniform integer in [lo, hi] (inclusive). Requires lo <= hi.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next_u64();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return lo + x % span;
  }

  /// Standard normal variate (Box-Muller, both outputs used).
  double normal();

  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2), E|z|^2 = 1.
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double kTwoPi = 6.283185307179586476925;
  const double radius = std::sqrt(-2.0 * std::log(uniform_open_zero()));
  const double angle = kTwoPi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

inline std::complex<double> Rng::complex_normal() {
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  const double re = normal();
  const double im = normal();
  return {re * kInvSqrt2, im * kInvSqrt2};
}

}  // namespace skewtrace
