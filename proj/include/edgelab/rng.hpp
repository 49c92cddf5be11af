#pragma once

// Reproducible randomness for instance generation and randomized learners.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are not (their algorithms are
// implementation-defined), so bounded sampling and shuffling are done here.

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace edgelab {

/// splitmix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for trial `trial` at size `n` of a sweep rooted at `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n,
                                    std::uint64_t trial) noexcept {
  return mix64(mix64(mix64(base) ^ n) ^ trial);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). Multiply-shift (Lemire) without the rejection
  /// step: bias is at most bound / 2^64.
  std::uint64_t below(std::uint64_t bound) {
    const unsigned __int128 product =
        static_cast<unsigned __int128>(engine_()) * bound;
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Fisher-Yates, highest index first.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace edgelab
