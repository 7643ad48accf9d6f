#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rsklip/tableaux.hpp"

namespace rsklip {

// Deterministic, splittable randomness: every (seed, stream) pair yields an
// independent substream, so trial i of a sweep is reproducible regardless of
// how trials are scheduled across workers. Bounded draws use rejection
// sampling on raw mt19937_64 output; nothing here depends on
// implementation-defined std distributions, so identical seeds give identical
// bytes on every platform.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::uint64_t stream)
      : gen_(mix(mix(seed) ^ mix(stream ^ 0x9e3779b97f4a7c15ull))) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, bound), bound >= 1.
  int below(int bound) {
    const std::uint64_t limit =
        ~0ull - (~0ull % static_cast<std::uint64_t>(bound));
    for (;;) {
      const std::uint64_t r = gen_();
      if (r < limit) return static_cast<int>(r % static_cast<std::uint64_t>(bound));
    }
  }

  static constexpr const char* name() {
    return "mt19937_64(splitmix64(seed,stream)), rejection-sampled bounds";
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {  // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
};

// Fisher-Yates shuffle of the identity word.
inline Permutation random_permutation(int n, SplitRng& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const int j = rng.below(i + 1);
    std::swap(v[i], v[j]);
  }
  return Permutation(std::move(v));
}

}  // namespace rsklip
