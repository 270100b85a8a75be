#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace vimp {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer. Used as the mixing step for stream-key derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGoldenGamma;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derives independent RNG substreams from a base seed by absorbing a sequence
// of words (labels, indices, parameter values). Every distinct absorb sequence
// yields a statistically independent stream key, and derivation is a pure
// function of (seed, words) so concurrent execution order cannot matter.
class StreamKey {
 public:
  explicit StreamKey(std::uint64_t seed) : state_(splitmix64(seed)) {}

  [[nodiscard]] StreamKey with(std::uint64_t word) const {
    StreamKey k(*this);
    k.state_ = splitmix64(k.state_ ^ word);
    return k;
  }
  [[nodiscard]] StreamKey with(std::string_view label) const {
    return with(fnv1a64(label));
  }
  [[nodiscard]] StreamKey with(double value) const {
    return with(std::bit_cast<std::uint64_t>(value));
  }

  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_;
};

// Seeded random stream. Uniform, bounded-integer, and normal draws are built
// directly on the raw 64-bit output of std::mt19937_64 so the byte-level
// behaviour is fully pinned by this file, independent of the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, bound) via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  // Standard normal via Box-Muller with a cached spare value.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;        // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.141592653589793238462643 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// In-place Fisher-Yates shuffle driven by next_below.
template <typename T>
void shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace vimp
