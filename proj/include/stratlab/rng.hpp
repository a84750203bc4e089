#pragma once

#include <cstdint>
#include <initializer_list>

namespace stratlab::rng {

// SplitMix64 finalizer. Statelessly turns (key, counter) into random bits,
// so every draw is addressable and results do not depend on evaluation order.
inline std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// A splittable stream: child(i) derives an independent substream, bits(i)
// reads the i-th draw of this stream.
struct Stream {
  std::uint64_t key = 0;

  Stream child(std::uint64_t i) const { return Stream{mix(key ^ mix(i + 0x5851f42d4c957f2dULL))}; }

  Stream child(std::initializer_list<std::uint64_t> path) const {
    Stream s = *this;
    for (auto i : path) s = s.child(i);
    return s;
  }

  std::uint64_t bits(std::uint64_t i) const { return mix(key + 0x2545f4914f6cdd1dULL * (i + 1)); }

  // uniform in [0, 1), 53-bit resolution
  double uniform(std::uint64_t i) const { return static_cast<double>(bits(i) >> 11) * 0x1.0p-53; }

  // Rademacher sign, +1 or -1
  int sign(std::uint64_t i) const { return (bits(i) & 1) ? 1 : -1; }
};

}  // namespace stratlab::rng
