#pragma once

#include <vector>

#include "causalchop/minkowski.hpp"

namespace causalchop::testsupport {

// Timelike future probes covering every spatial sign pattern, plus the time
// axis.
inline std::vector<ExactVector> probe_set(int d) {
  std::vector<ExactVector> probes;
  probes.push_back(ExactVector::time_axis(d));
  const int spatial = d - 1;
  for (int mask = 0; mask < (1 << spatial); ++mask) {
    std::vector<Rational> c(static_cast<size_t>(d));
    c[0] = Rational(d);  // d^2 > d-1, so timelike
    for (int k = 0; k < spatial; ++k)
      c[static_cast<size_t>(k + 1)] = Rational((mask >> k) & 1 ? 1 : -1);
    probes.push_back(ExactVector(std::move(c)));
  }
  return probes;
}

// For xi outside the closed future cone, a concrete timelike future u with
// u.xi < 0 (self-duality witness). Exact construction, no search over probes.
inline ExactVector negative_witness(const ExactVector& xi) {
  const int d = xi.dim();
  const CausalClass cls = causal_class(xi);
  if (cls == CausalClass::TimelikePast || cls == CausalClass::LightlikePast)
    return ExactVector::time_axis(d);  // u.xi = xi0 < 0
  if (cls != CausalClass::Spacelike)
    throw PreconditionViolated("xi is in the closed future cone");
  Rational spatial_sq;
  Rational abs_sum(1);
  for (int k = 1; k < d; ++k) {
    spatial_sq += xi[k] * xi[k];
    abs_sum += abs(xi[k]);
  }
  auto with_time = [&](const Rational& a) {
    std::vector<Rational> c(static_cast<size_t>(d));
    c[0] = a;
    for (int k = 1; k < d; ++k) c[static_cast<size_t>(k)] = xi[k];
    return ExactVector(std::move(c));
  };
  if (xi.time().sign() <= 0) {
    // u = (A, spatial(xi)) with A > |spatial|: u.xi = A xi0 - |spatial|^2 < 0.
    return with_time(abs_sum);
  }
  // Need |spatial| < A < |spatial|^2 / xi0; bisect for a rational A.
  const Rational hi = spatial_sq / xi.time();
  Rational lo = xi.time();
  Rational cand = (lo + hi) / Rational(2);
  while (!(cand * cand > spatial_sq)) {
    lo = cand;
    cand = (lo + hi) / Rational(2);
  }
  return with_time(cand);
}

}  // namespace causalchop::testsupport
