#pragma once

#include <cstdint>
#include <random>

namespace bargmann {

// SplitMix64 finalizer over (master seed, draw index). Every random draw in
// the library gets its own engine seeded this way, so results are
// reproducible no matter how work is split across threads.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index = 0) {
  return std::mt19937_64(mix_seed(seed, index));
}

}  // namespace bargmann
