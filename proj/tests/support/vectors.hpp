#pragma once

#include <initializer_list>

#include "causalchop/region.hpp"

namespace causalchop::testsupport {

inline ExactVector V(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return ExactVector(std::move(c));
}

inline Rational Q(long n, long d = 1) { return Rational(n, d); }

inline std::vector<StringGeom> fig1_cyclic() {
  // Three strings in d=3, each chasing the next one's base with a slight
  // future tilt; compare gives the full cycle and no latest member.
  return {StringGeom(V({0, 0, 0}), V({1, 4, 0})),
          StringGeom(V({0, 4, 0}), V({1, -2, 3})),
          StringGeom(V({0, 2, 3}), V({1, -2, -3}))};
}

// The generic incomparable pair: the base of S is timelike future of the base
// of S', while the deep tail of S dives into the past of S'.
inline StringGeom incomparable_s() {
  return StringGeom(V({2, 0, 0, 1}), V({-3, 0, 5, 0}));
}
inline StringGeom incomparable_sp() {
  return StringGeom(V({0, 0, 0, 0}), V({0, 0, 1, 0}));
}

}  // namespace causalchop::testsupport
