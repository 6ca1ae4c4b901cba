#pragma once

#include <cstdint>

#include "causalchop/region.hpp"

namespace causalchop::testsupport {

// splitmix64: portable deterministic stream, independent of any standard
// library distribution implementation.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97f4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rational rational(long max_abs_num, long max_den) {
    return Rational(int_in(-max_abs_num, max_abs_num), int_in(1, max_den));
  }

  ExactVector vector(int dim, long max_abs_num, long max_den) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) c.push_back(rational(max_abs_num, max_den));
    return ExactVector(std::move(c));
  }

  ExactVector spacelike(int dim, long max_abs_num = 8, long max_den = 4) {
    for (;;) {
      ExactVector v = vector(dim, max_abs_num, max_den);
      if (is_spacelike(v)) return v;
    }
  }

  StringGeom string(int dim, long max_abs_num = 8, long max_den = 4) {
    return StringGeom(vector(dim, max_abs_num, max_den),
                      spacelike(dim, max_abs_num, max_den));
  }

 private:
  std::uint64_t state_;
};

}  // namespace causalchop::testsupport
