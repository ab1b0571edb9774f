#pragma once

#include <cstdint>
#include <vector>

namespace asdex {

/// Fixed per-purpose stream offsets so that, e.g., sampling and optimizer
/// restarts never share a random stream for the same user seed.
namespace rng_stream {
constexpr std::uint64_t sampling = 0x01;
constexpr std::uint64_t surrogate_fit = 0x02;
constexpr std::uint64_t optimizer_restarts = 0x03;
constexpr std::uint64_t infill_jitter = 0x04;
constexpr std::uint64_t validation = 0x05;
}  // namespace rng_stream

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ generator (Blackman & Vigna). Chosen over std::mt19937_64
/// because the full pipeline, including the uniform-double mapping below, is
/// specified here and therefore bit-reproducible across platforms and
/// standard-library implementations.
///
/// Seeding: state = four successive splitmix64 outputs starting from
/// seed ^ (stream * 0xA0761D6478BD642F).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t init = seed ^ (stream * 0xA0761D6478BD642FULL);
    for (auto& word : state_) word = splitmix64_next(init);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0,1): top 53 bits scaled by 2^-53.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [a,b).
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform integer in [0,n), n >= 1. Rejection sampling keeps the
  /// distribution exact and the stream platform-independent.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace asdex
