#pragma once

#include <cstdint>

namespace reliacut {

/// SplitMix64 output function (Steele, Lea, Flood; same finalizer as in
/// the xoshiro reference code). Pure integer arithmetic, so draw
/// sequences are bit-identical across platforms.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Mixes a tuple of 64-bit words into a single seed. Used to derive
/// independent sub-stream seeds from (seed, index...) tuples.
template <typename... Words>
constexpr std::uint64_t mix_seed(std::uint64_t first, Words... rest) {
  std::uint64_t state = first;
  std::uint64_t out = splitmix64(state);
  ((state ^= static_cast<std::uint64_t>(rest), out = splitmix64(state)), ...);
  return out;
}

/// Seeded uniform random stream backed by SplitMix64. Identical seeds
/// give identical draw sequences everywhere; sub-streams derived via
/// substream() are independent by construction (each runs SplitMix64
/// from a freshly mixed state).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed)
      : seed_(seed), state_(mix_seed(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform draw in [0, 1), 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Independent sub-stream for (this stream's seed, index).
  RandomStream substream(std::uint64_t index) const {
    return RandomStream(mix_seed(seed_, 0x5354524dULL, index));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace reliacut
