// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace hexprob {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

/// SplitMix64 output function (Steele, Lea, Flood). A bijection on 64-bit
/// words; the k-th stream output for seed s is splitmix_mix(s + k*gamma).
constexpr std::uint64_t splitmix_mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Sequential SplitMix64 generator.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kSplitMixGamma;
        return splitmix_mix(state_);
    }

  private:
    std::uint64_t state_;
};

/// Seed of the dedicated substream for one sample. Sample `index` of run
/// `seed` draws from SplitMix64(sample_stream_seed(seed, index)), making
/// every sample a pure function of (seed, index) — chunking and scheduling
/// cannot change the stream.
constexpr std::uint64_t sample_stream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix_mix(seed + (index + 1) * kSplitMixGamma);
}

/// Top 53 bits mapped to (0, 1]; safe as a log argument.
inline double u64_to_unit_open(std::uint64_t x) {
    return static_cast<double>((x >> 11) + 1) * 0x1.0p-53;
}

/// Top 53 bits mapped to [0, 1).
inline double u64_to_unit_half(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace hexprob
