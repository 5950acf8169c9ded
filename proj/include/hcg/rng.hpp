#pragma once

#include <cstdint>

namespace hcg {

// Counter-based 64-bit generator.  Output i of the stream with seed s is
// mix64(s + i * 0x9E3779B97F4A7C15) where mix64 is the SplitMix64 finalizer.
// Every random choice in the library flows through this generator, so any
// record is reproducible from its seed alone.  The algorithm is part of the
// i/o contract and must not change.
class Rng {
 public:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit Rng(uint64_t seed) : seed_(seed) {}

  static uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  uint64_t next_u64() { return mix64(seed_ + ++counter_ * kGamma); }

  // [0, 1), 53-bit resolution
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // strictly inside (0, 1); safe to pass to log()
  double next_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // uniform in [0, bound); bound >= 1
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  // independent stream labelled by (label); derivation is fixed
  Rng substream(uint64_t label) const {
    return Rng(mix64(seed_ ^ mix64(label + kGamma)));
  }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace hcg
