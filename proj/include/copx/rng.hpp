#pragma once

#include <cstdint>
#include <random>

#include "copx/rational.hpp"

namespace copx {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic RNG for test and trial data. Integer draws use explicit
/// modulo mapping so results depend only on the seed, not on library
/// distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Sub-stream for job `index`; streams are stable under any execution order.
  static Rng derived(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xa0761d6478bd642fULL * (index + 1));
    return Rng(splitmix64(s));
  }

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  bool coin() { return (next_u64() & 1) != 0; }

  /// Random canonical rational with numerator in [num_lo, num_hi] and
  /// denominator in [1, den_hi].
  Rat rat(long num_lo, long num_hi, long den_hi) {
    long p = uniform(num_lo, num_hi);
    long q = uniform(1, den_hi);
    return Rat(mpz_class(p), mpz_class(q));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace copx
