#pragma once

#include <cstdint>
#include <stdexcept>

namespace knaplat {

/// splitmix64; deterministic across platforms, seed recorded with every
/// generated artifact so instances are reproducible.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// uniform-ish integer in [lo, hi]; modulo bias is irrelevant at these sizes
  long range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("SplitMix64::range: empty interval");
    uint64_t width = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % width);
  }

  bool coin() { return (next() & 1) != 0; }
};

}  // namespace knaplat
