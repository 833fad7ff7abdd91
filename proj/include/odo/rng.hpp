#pragma once

#include <cstdint>
#include <random>

#include "odo/errors.hpp"

namespace odo {

// All randomness in the library flows through std::mt19937_64 so that runs
// replicate bit-for-bit across platforms and standard libraries.
using Rng = std::mt19937_64;

// U(0,1) via the 53-bit mantissa construction. Deterministic across
// implementations, unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased index in [0, n) by rejection sampling.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  require(n >= 1, "uniform_index: n must be >= 1");
  const std::uint64_t limit =
      std::uint64_t(-1) - std::uint64_t(-1) % static_cast<std::uint64_t>(n);
  std::uint64_t v = rng();
  while (v >= limit) {
    v = rng();
  }
  return static_cast<std::size_t>(v % static_cast<std::uint64_t>(n));
}

}  // namespace odo
