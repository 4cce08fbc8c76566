#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace tensemap {

// SplitMix64 step. All sampling in the project sits on top of this raw
// sequence so that seeded runs reproduce bit-identically regardless of the
// standard library's distribution implementations.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Decorrelated child seed for stream `stream` of `base`.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base;
  const std::uint64_t a = splitmix64_next(s);
  s ^= 0xD1B54A32D192ED03ull * (stream + 1);
  const std::uint64_t b = splitmix64_next(s);
  return a ^ (b + 0x165667B19E3779F9ull);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi] inclusive, rejection-sampled (unbiased).
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1u;
    const std::uint64_t limit = ~0ull - ~0ull % range;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return lo + static_cast<int>(x % range);
  }

  /// Box-Muller; consumes exactly two raw draws per call.
  double normal(double mean, double stddev) {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Independent child stream. Depends only on the construction seed, not on
  // how much this generator has been consumed, so trial k's stream is the
  // same whether or not trials 0..k-1 ran in this process.
  Rng fork(std::uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace tensemap
