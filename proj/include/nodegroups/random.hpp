#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nodegroups {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; a bijective scrambler of 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Child seed for stream `index` of `parent`. Children of one parent are
/// independent of how many siblings exist or in which order they are used.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(splitmix64(parent) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view tag,
                                    std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return derive_seed(derive_seed(parent, h), index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace nodegroups
