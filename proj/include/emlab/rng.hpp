#pragma once

// Reproducible random streams.
//
// The generator is SplitMix64 (Steele, Lea & Flood; the java.util
// SplittableRandom mixer): 64-bit state advanced by the golden-gamma
// increment, output through two xor-multiply finalizer rounds. It is fixed
// here by algorithm, not by library, so any language can replay a seed.
//
// Independent per-sample streams are derived by hashing (seed, index)
// through the same finalizer before use; every sample of a run owns its own
// stream, which makes parallel execution order-independent.

#include <cstdint>

namespace emlab {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr std::uint64_t next_u64() { return mix64(state_ += kGoldenGamma); }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as a log() argument.
  double next_double_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (cosine branch). Consumes exactly two
  // draws per call, so stream positions stay predictable.
  double next_normal();

 private:
  std::uint64_t state_;
};

// Stream for sample `index` of run `seed`. Distinct (seed, index) pairs land
// at well-separated states with overwhelming probability.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed + kGoldenGamma * (index + 1)));
}

}  // namespace emlab
