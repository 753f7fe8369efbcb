#pragma once

#include <cstdint>

namespace boxdom {

// splitmix64 (Steele, Lea, Flood; the java.util.SplittableRandom finalizer).
// Chosen because it is tiny, well known, seedable, and splittable, so random
// graph corpora and the seeded-random alteration policy are reproducible
// from a single documented u64 seed across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Independent child stream; the parent advances by one draw.
  SplitMix64 split() { return SplitMix64(next()); }

  // Uniform-enough draw from [0, n); modulo bias is irrelevant here (the
  // draws only steer which of a handful of valid alteration choices is
  // taken, and determinism, not uniformity, is the requirement).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

}  // namespace boxdom
