#pragma once

// Seeded sampling used by every randomized sweep.
//
// The stream is std::mt19937_64 seeded with the 64-bit seed directly; its
// output sequence is fixed by the C++ standard. Uniform doubles take the top
// 53 bits: u = (word >> 11) * 2^-53, in [0, 1). Nothing here goes through the
// implementation-defined std:: distributions, so a given seed yields the same
// samples with every conforming standard library.

#include <cstdint>
#include <random>

namespace genspin {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on {0, ..., n-1} by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t w;
    do {
      w = engine_();
    } while (w >= limit);
    return w % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace genspin
