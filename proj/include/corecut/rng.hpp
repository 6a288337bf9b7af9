#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace corecut {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Engine for stream `stream` of a run seeded with `seed`. Each stream is
// derived from (seed, stream) only, so results do not depend on which worker
// ends up consuming it.
inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1)));
}

// Uniform draw from [0, n) by rejection. std::uniform_int_distribution is
// implementation-defined, which would break cross-toolchain reproducibility.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

// Forward Fisher-Yates on the first k slots: after k steps items[0..k) is a
// uniform k-sample without replacement, and a longer run extends a shorter
// one (prefix property).
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t k, std::mt19937_64& rng) {
  const std::size_t n = items.size();
  for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(items[i], items[j]);
  }
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  partial_shuffle(items, items.size(), rng);
}

}  // namespace corecut
