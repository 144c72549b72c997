#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace segnoise {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// SplitMix64 (Steele, Lea, Flood 2014): the pinned 64-bit generator used for
/// every stochastic operation in the library. Fixed golden-ratio increment,
/// finalizer-mixed output; bit-reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return detail::mix64(state_);
  }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Fixed hash split of (seed, stream): sub-seed for independent sub-streams
/// (displacement channels, Monte Carlo sample indices).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return detail::mix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
}

/// Standard normal variates by the Box-Muller transform over SplitMix64.
/// The transform is pinned: u1 in (0,1], u2 in [0,1),
/// z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = sqrt(-2 ln u1) sin(2 pi u2),
/// returned in the order z0, z1.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - rng_.next_unit();
    const double u2 = rng_.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  SplitMix64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace segnoise
