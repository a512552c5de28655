#pragma once

#include <cstdint>
#include <limits>

namespace confdiff {

/// SplitMix64 finalizer. Used for seed expansion and stream derivation.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic child seed for stream `index` of `seed`.
///
/// child = mix(seed + golden * (index + 1)) ^ mix(index), where mix is the
/// SplitMix64 finalizer. Distinct indices give decorrelated seeds and the
/// mapping is identical on every platform.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t index) noexcept {
  constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
  return splitmix64_mix(seed + golden * (index + 1)) ^ splitmix64_mix(index);
}

/// xoshiro256** 1.0 (Blackman & Vigna), state filled by SplitMix64 from a
/// 64-bit seed. Satisfies UniformRandomBitGenerator, but the library only
/// uses the member helpers below so that every draw is bit-reproducible
/// (std:: distributions are implementation-defined).
class Rng {
 public:
  using result_type = std::uint64_t;

  static constexpr const char* algorithm = "xoshiro256**/splitmix64-v1";

  explicit constexpr Rng(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      word = splitmix64_mix(x);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Bernoulli(p): true iff uniform() < p. p <= 0 never fires, p >= 1 always
  /// fires. Always consumes exactly one draw.
  constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Uniform integer in [0, bound), bound > 0. Lemire's multiply-and-reject
  /// method; the number of draws consumed depends only on the stream.
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m =
        static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4]{};
};

}  // namespace confdiff
