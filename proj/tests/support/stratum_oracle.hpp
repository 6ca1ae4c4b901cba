#pragma once

#include "causalchop/stratum.hpp"

namespace causalchop::testsupport {

// Independent stratum classifier: tries the defining linear systems of each
// stratum directly, via Cramer solves over every coordinate pair plus an
// explicit parallel branch. Used as the brute-force oracle.
inline Stratum stratum_oracle(const ExactVector& x, const ExactVector& e,
                              const ExactVector& xp, const ExactVector& ep) {
  const int d = x.dim();
  if (x == xp) return Stratum::Delta2_0;

  auto scalar_on_ray = [&](const ExactVector& base, const ExactVector& dir,
                           const ExactVector& target) -> std::optional<Rational> {
    // target = base + r dir with a single consistent ratio.
    std::optional<Rational> r;
    for (int k = 0; k < d; ++k) {
      const Rational delta = target[k] - base[k];
      if (dir[k].is_zero()) {
        if (!delta.is_zero()) return std::nullopt;
        continue;
      }
      const Rational cand = delta / dir[k];
      if (r && *r != cand) return std::nullopt;
      r = cand;
    }
    return r;
  };
  if (auto r = scalar_on_ray(x, e, xp); r && r->sign() > 0) return Stratum::Delta2_1a;
  if (auto r = scalar_on_ray(xp, ep, x); r && r->sign() > 0) return Stratum::Delta2_1b;

  // Interior crossing: solve r e - r' ep = xp - x over every coordinate pair.
  const ExactVector rhs = xp - x;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Rational det = e[i] * (-ep[j]) - (-ep[i]) * e[j];
      if (det.is_zero()) continue;
      const Rational r = (rhs[i] * (-ep[j]) - (-ep[i]) * rhs[j]) / det;
      const Rational rp = (e[i] * rhs[j] - e[j] * rhs[i]) / det;
      bool consistent = true;
      for (int k = 0; k < d && consistent; ++k)
        if (r * e[k] - rp * ep[k] != rhs[k]) consistent = false;
      if (consistent && r.sign() > 0 && rp.sign() > 0) return Stratum::Delta2_2;
      return Stratum::OffDiagonal;
    }
  }
  // Directions parallel. Any collinear overlap already classified as
  // Delta2_0 / Delta2_1a / Delta2_1b above; what remains is disjoint.
  return Stratum::OffDiagonal;
}

}  // namespace causalchop::testsupport
