#pragma once

#include <cstdint>
#include <vector>

namespace tvb {

// Counter-based splittable PRNG (splitmix64). Chosen over std::mt19937
// because the output sequence is pinned by ~10 lines of code, so seeded
// runs reproduce bit-for-bit on any platform; test vectors are frozen in
// the unit tests. Substreams derived from (seed, salt) are independent
// enough for sampling work and keep parallel scans deterministic.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n); n == 0 is a contract violation. Plain
  // modulo: the bias is < n/2^64, irrelevant for test-data generation,
  // and keeping it branch-free keeps the sequence easy to pin down.
  uint64_t bounded(uint64_t n) { return next() % n; }

  // Inclusive integer range [lo, hi].
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

// Derives a deterministic substream: hashes the salt into the seed with
// one splitmix step so that (seed, 0), (seed, 1), ... are decorrelated.
inline SplitMix64 substream(uint64_t seed, uint64_t salt) {
  SplitMix64 g(seed ^ (salt * 0xD6E8FEB86659FD93ULL + 0x9E3779B97F4A7C15ULL));
  return SplitMix64(g.next());
}

}  // namespace tvb
