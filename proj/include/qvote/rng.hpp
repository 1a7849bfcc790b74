#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qvote/errors.hpp"

namespace qvote {

// Reproducible random stream.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// C++ standard, seeded through one round of SplitMix64 so that nearby user
// seeds give unrelated streams. Uniform doubles are produced by taking the
// top 53 bits of one draw, never via std::uniform_real_distribution (whose
// output is implementation-defined).
//
// Stream splitting: substream(k) of a stream with root seed s is an
// independent stream with root seed splitmix64(s XOR (k+1)*0x9E3779B97F4A7C15).
// Substreams of the same parent never share a seed for distinct k.
class RngStream {
public:
  explicit RngStream(uint64_t seed) : root_seed_(seed), gen_(splitmix64(seed)) {}

  uint64_t root_seed() const { return root_seed_; }

  uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  uint64_t uniform_below(uint64_t n) {
    // rejection sampling keeps the draw unbiased
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Index drawn from an (unnormalized is tolerated within rounding) finite
  // distribution by inverse CDF over the stored order.
  int categorical(std::span<const double> probs) {
    if (probs.empty()) throw Error("categorical: empty distribution");
    const double u = uniform01();
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    // rounding pushed the total below u; return the last supported index
    for (size_t i = probs.size(); i-- > 0;) {
      if (probs[i] > 0.0) return static_cast<int>(i);
    }
    throw Error("categorical: distribution sums to zero");
  }

  RngStream substream(uint64_t index) const {
    return RngStream(splitmix64(root_seed_ ^ ((index + 1) * 0x9E3779B97F4A7C15ULL)));
  }

  static uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

private:
  uint64_t root_seed_;
  std::mt19937_64 gen_;
};

} // namespace qvote
