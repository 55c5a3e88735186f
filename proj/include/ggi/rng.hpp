#pragma once

#include <cstdint>

#include "ggi/numbers.hpp"

namespace ggi {

// Small deterministic generator (splitmix64).  We do not use
// std::uniform_int_distribution so that sampled values are identical on
// every platform for a given seed; reports embed the seed so every sampled
// verdict is replayable.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  // Small-numerator nonzero rational, numerator in [-5,5]\{0}, denominator in [1,4].
  Rat small_rational_nonzero() {
    long num = static_cast<long>(below(10)) - 5;  // -5..4
    if (num >= 0) ++num;                          // skip 0 -> -5..-1, 1..5
    long den = static_cast<long>(below(4)) + 1;
    return Rat(num, den);
  }

  // As above but also != 1 (for character coordinates).
  Rat small_rational_not_zero_or_one() {
    for (;;) {
      Rat r = small_rational_nonzero();
      if (r != 1) return r;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace ggi
