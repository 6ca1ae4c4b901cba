#pragma once

#include "causalchop/exact_vector.hpp"

namespace causalchop {

enum class CausalClass {
  Zero,
  TimelikeFuture,
  TimelikePast,
  LightlikeFuture,
  LightlikePast,
  Spacelike,
};

enum class SpanClass {
  SpacelikeSpan,
  TimelikeSpan,
  LightlikeSpan,
  DegenerateParallel,
};

const char* to_string(CausalClass c);
const char* to_string(SpanClass c);

// Minkowski contraction x.y = x0 y0 - sum_k xk yk, exact.
Rational mdot(const ExactVector& x, const ExactVector& y);

inline Rational msq(const ExactVector& x) { return mdot(x, x); }

CausalClass causal_class(const ExactVector& xi);

inline bool is_spacelike(const ExactVector& xi) {
  return causal_class(xi) == CausalClass::Spacelike;
}
inline bool is_timelike_future(const ExactVector& xi) {
  return causal_class(xi) == CausalClass::TimelikeFuture;
}

// Membership of xi in the closed past cone V-bar_minus (includes 0).
bool in_closed_past_cone(const ExactVector& xi);
// Membership in the closed future cone V-bar_plus (includes 0).
bool in_closed_future_cone(const ExactVector& xi);

// Gram determinant (e.e)(e'.e') - (e.e')^2. Positive for a spacelike span of
// two spacelike vectors, negative for timelike, zero for lightlike.
Rational gram2(const ExactVector& e, const ExactVector& ep);

// True iff ep is a rational multiple of e (both nonzero assumed).
bool parallel(const ExactVector& e, const ExactVector& ep);

// Classification of span{e, e'} for spacelike nonzero e, e'. Scale-invariant:
// uses the sign of the Gram determinant, which for unit vectors reduces to
// the sign of 1 - (e.e')^2.
SpanClass span_class(const ExactVector& e, const ExactVector& ep);

// xi minus its component along ep: xi - ((ep.xi)/(ep.ep)) ep. Requires
// ep.ep != 0; the result is Minkowski-orthogonal to ep.
ExactVector project_orth(const ExactVector& ep, const ExactVector& xi);

// Spacelike hyperplane a + u-perp with timelike future normal u.
struct Hyperplane {
  Hyperplane(ExactVector base_point, ExactVector future_normal)
      : base(std::move(base_point)), normal(std::move(future_normal)) {
    base.check_dim(normal);
    if (!is_timelike_future(normal))
      throw NonSpacelikeDirection("hyperplane normal must be timelike future");
  }
  ExactVector base;
  ExactVector normal;
};

// sign(p*sqrt(alpha) - q*sqrt(beta)) for rational p, q and nonnegative
// rational alpha, beta. Exact: compares signed squares.
int cmp_scaled_sqrt(const Rational& p, const Rational& alpha, const Rational& q,
                    const Rational& beta);

// Posteriority of spacelike DIRECTIONS: whether e/|e| is later than e'/|e'|
// as events on the unit hyperboloid, i.e. e-hat not in the closed past cone
// of e'-hat. Exact despite the irrational normalizations.
bool dir_later(const ExactVector& e, const ExactVector& ep);

}  // namespace causalchop
