#pragma once

#include <cstdint>

namespace pickaudit {

// Seed for the library's deterministic generator. The same seed and the same
// call sequence always produce the same stream, on every platform.
struct RngSeed {
  std::uint64_t value = 0;
};

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kSeedSalt = 0x5851F42D4C957F2Dull;

}  // namespace detail

// Derives a decorrelated child seed from (root, index). Used to give every
// Monte-Carlo trial or replicate its own stream, so that trials can be
// evaluated in any order (or concurrently) and still reproduce the serial
// results bit for bit.
inline RngSeed derive_seed(RngSeed root, std::uint64_t index) {
  std::uint64_t h = detail::mix64(root.value ^ detail::kSeedSalt);
  return RngSeed{detail::mix64(h + detail::kGolden * (index + 1))};
}

// Counter-based SplitMix64 stream. The state advances by a fixed odd
// increment and each output is the finalizer of the state, so the k-th draw
// is a pure function of (seed, k).
class RngStream {
 public:
  explicit RngStream(RngSeed seed) : state_(detail::mix64(seed.value ^ detail::kSeedSalt)) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // Uniform draw strictly inside (0, 1): (k + 1/2) / 2^53 for k in [0, 2^53).
  double next_uniform() {
    const std::uint64_t k = next_u64() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound) via rejection sampling. bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace pickaudit
