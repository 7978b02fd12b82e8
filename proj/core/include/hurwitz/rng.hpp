#ifndef HURWITZ_RNG_HPP
#define HURWITZ_RNG_HPP

#include <cstdint>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Counter-based generator: the stream for sample i depends only on
// (seed, i), so results do not change with batching or evaluation order.
// The mixer is splitmix64.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t sample_index)
      : state_(mix(seed) ^ mix(0x9e3779b97f4a7c15ULL * (sample_index + 1))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix_final(state_);
  }

  // Exact dyadic fraction k / 2^64 in [0, 1).
  Rational next_unit_fraction() {
    Integer n(static_cast<unsigned long>(next()));
    Rational q(n, Integer(1) << 64);
    q.canonicalize();
    return q;
  }

  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform value in {0, ..., n-1} by rejection.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    return mix_final(z);
  }
  static std::uint64_t mix_final(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace hurwitz

#endif  // HURWITZ_RNG_HPP
