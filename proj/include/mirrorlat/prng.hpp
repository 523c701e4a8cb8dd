// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_PRNG_HPP
#define MIRRORLAT_PRNG_HPP

#include <cstdint>

#include "mirrorlat/rational.hpp"

namespace mirrorlat {

// splitmix64: tiny, fast, and fully reproducible across platforms.  Used for
// all randomized sampling so that a recorded seed replays a run exactly.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 bits of entropy.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

// Uniform exact rational with numerator in [-num_bound, num_bound] and
// denominator in [1, den_bound], for seeded sampling of weight parameters.
inline Rational random_rational(SplitMix64& rng, long num_bound, long den_bound) {
  const long span = 2 * num_bound + 1;
  const long num = static_cast<long>(rng.next() % static_cast<std::uint64_t>(span)) - num_bound;
  const long den = 1 + static_cast<long>(rng.next() % static_cast<std::uint64_t>(den_bound));
  return Rational(num, den);
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_PRNG_HPP
