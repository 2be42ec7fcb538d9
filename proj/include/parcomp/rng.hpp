#pragma once

#include <cstdint>

namespace parcomp {

// SplitMix64: a splittable PRNG with a 64-bit state and a fixed output
// function (Steele, Lea & Flood). Chosen over std::mt19937 because the
// stream is bit-reproducible across platforms and trivially splittable,
// which keeps seeded noise draws and generated workloads byte-identical
// everywhere.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform double strictly inside (0, 1); safe to feed to inverse CDFs.
  double next_open_double() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound) via rejection; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    while (true) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  // Derives an independent child stream; advances this stream by one step.
  SplitMix64 split() {
    return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL);
  }

 private:
  std::uint64_t state_;
};

// Convenience: child seed for stream `index` under `seed`, stable across
// calls (does not depend on draw order elsewhere).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return g.next();
}

}  // namespace parcomp
