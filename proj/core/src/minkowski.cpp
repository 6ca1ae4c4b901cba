#include "causalchop/minkowski.hpp"

namespace causalchop {

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Zero: return "Zero";
    case CausalClass::TimelikeFuture: return "TimelikeFuture";
    case CausalClass::TimelikePast: return "TimelikePast";
    case CausalClass::LightlikeFuture: return "LightlikeFuture";
    case CausalClass::LightlikePast: return "LightlikePast";
    case CausalClass::Spacelike: return "Spacelike";
  }
  return "?";
}

const char* to_string(SpanClass c) {
  switch (c) {
    case SpanClass::SpacelikeSpan: return "SpacelikeSpan";
    case SpanClass::TimelikeSpan: return "TimelikeSpan";
    case SpanClass::LightlikeSpan: return "LightlikeSpan";
    case SpanClass::DegenerateParallel: return "DegenerateParallel";
  }
  return "?";
}

Rational mdot(const ExactVector& x, const ExactVector& y) {
  x.check_dim(y);
  Rational acc = x[0] * y[0];
  for (int k = 1; k < x.dim(); ++k) acc -= x[k] * y[k];
  return acc;
}

CausalClass causal_class(const ExactVector& xi) {
  if (xi.is_zero()) return CausalClass::Zero;
  const int sq = msq(xi).sign();
  const int t = xi.time().sign();
  if (sq > 0)
    return t > 0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
  if (sq == 0)
    return t > 0 ? CausalClass::LightlikeFuture : CausalClass::LightlikePast;
  return CausalClass::Spacelike;
}

bool in_closed_past_cone(const ExactVector& xi) {
  return msq(xi).sign() >= 0 && xi.time().sign() <= 0;
}

bool in_closed_future_cone(const ExactVector& xi) {
  return msq(xi).sign() >= 0 && xi.time().sign() >= 0;
}

Rational gram2(const ExactVector& e, const ExactVector& ep) {
  const Rational c = mdot(e, ep);
  return msq(e) * msq(ep) - c * c;
}

bool parallel(const ExactVector& e, const ExactVector& ep) {
  e.check_dim(ep);
  // ep = mu * e for some rational mu: cross-ratios of all component pairs agree.
  int pivot = -1;
  for (int i = 0; i < e.dim(); ++i)
    if (!e[i].is_zero()) { pivot = i; break; }
  if (pivot < 0) return ep.is_zero();
  const Rational mu = ep[pivot] / e[pivot];
  for (int i = 0; i < e.dim(); ++i)
    if (ep[i] != mu * e[i]) return false;
  return true;
}

SpanClass span_class(const ExactVector& e, const ExactVector& ep) {
  if (!is_spacelike(e) || !is_spacelike(ep))
    throw NonSpacelikeDirection("span_class requires spacelike nonzero inputs");
  if (parallel(e, ep)) return SpanClass::DegenerateParallel;
  const int g = gram2(e, ep).sign();
  if (g < 0) return SpanClass::TimelikeSpan;
  if (g == 0) return SpanClass::LightlikeSpan;
  return SpanClass::SpacelikeSpan;
}

ExactVector project_orth(const ExactVector& ep, const ExactVector& xi) {
  const Rational n = msq(ep);
  if (n.is_zero())
    throw NonSpacelikeDirection("projection axis must be non-lightlike");
  return xi - (mdot(ep, xi) / n) * ep;
}

int cmp_scaled_sqrt(const Rational& p, const Rational& alpha, const Rational& q,
                    const Rational& beta) {
  if (alpha.sign() < 0 || beta.sign() < 0)
    throw PreconditionViolated("cmp_scaled_sqrt requires nonnegative radicands");
  // Effective signs of the two sides.
  const int sp = alpha.is_zero() ? 0 : p.sign();
  const int sq = beta.is_zero() ? 0 : q.sign();
  if (sp != sq) return sp > sq ? 1 : -1;
  if (sp == 0) return 0;
  // Same nonzero sign: compare squares, flipping when both negative.
  const Rational lhs = p * p * alpha;
  const Rational rhs = q * q * beta;
  const int c = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  return sp > 0 ? c : -c;
}

bool dir_later(const ExactVector& e, const ExactVector& ep) {
  if (!is_spacelike(e) || !is_spacelike(ep))
    throw NonSpacelikeDirection("dir_later requires spacelike inputs");
  const Rational a = -msq(e);   // > 0
  const Rational b = -msq(ep);  // > 0
  const Rational c = mdot(e, ep);
  // (e-hat - ep-hat)^2 = -2(1 + c/sqrt(ab)) >= 0 iff c <= -sqrt(ab). Equality
  // with c < 0 covers the coincident-direction case (difference zero).
  const bool sq_nonneg = c.sign() < 0 && c * c >= a * b;
  if (!sq_nonneg) return true;
  // Time component of e-hat - ep-hat has the sign of e0*sqrt(b) - ep0*sqrt(a).
  const bool time_nonpos = cmp_scaled_sqrt(e.time(), b, ep.time(), a) <= 0;
  return !time_nonpos;
}

}  // namespace causalchop
