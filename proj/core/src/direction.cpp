#include "causalchop/chop.hpp"
#include "causalchop/poly.hpp"

namespace causalchop {

namespace {

// Minkowski projection of v onto the orthogonal complement of the plane
// span{p, q}; requires an invertible plane Gram matrix. When the plane is
// spacelike and v is the time axis, the result is automatically timelike
// future: v = u + proj with u orthogonal to proj gives u.u = 1 - proj.proj
// >= 1 and u0 = u.v = u.u > 0.
ExactVector project_out_plane(const ExactVector& v, const ExactVector& p,
                              const ExactVector& q) {
  const Rational gpp = msq(p), gqq = msq(q), gpq = mdot(p, q);
  const Rational det = gpp * gqq - gpq * gpq;
  if (det.is_zero())
    throw PreconditionViolated("degenerate plane in projection");
  const Rational vp = mdot(v, p), vq = mdot(v, q);
  const Rational alpha = (vp * gqq - vq * gpq) / det;
  const Rational beta = (gpp * vq - gpq * vp) / det;
  return v - alpha * p - beta * q;
}

// Largest dyadic eps = 2^-k (k = 0..) for which check passes; the existence
// of a small enough eps is guaranteed by the construction, so failure to find
// one is a defect.
template <typename Check>
Rational dyadic_eps(const Check& check) {
  Rational eps(1);
  for (int k = 0; k <= 512; ++k) {
    if (check(eps)) return eps;
    eps /= Rational(2);
  }
  throw InternalVerificationFailure("no dyadic epsilon satisfied the exact re-check");
}

bool valid_separator(const ExactVector& u, const ExactVector& e, const ExactVector& ep) {
  return msq(u).sign() > 0 && u.time().sign() > 0 && mdot(u, e).sign() > 0 &&
         mdot(u, ep).sign() < 0;
}

}  // namespace

ExactVector direction_separator(const ExactVector& e, const ExactVector& ep) {
  if (!is_spacelike(e) || !is_spacelike(ep))
    throw PreconditionViolated("direction_separator requires spacelike directions");
  if (!dir_later(e, ep))
    throw PreconditionViolated("direction_separator requires e-hat later than ep-hat");
  const int d = e.dim();
  const ExactVector w = ExactVector::time_axis(d);
  const Rational a = -msq(e), b = -msq(ep), c = mdot(e, ep);
  const Rational G = a * b - c * c;  // -gram2(e, ep)

  ExactVector u = w;
  if (parallel(e, ep)) {
    // Antiparallel (same orientation is excluded by the precondition):
    // u0 orthogonal to e, tilted against e.
    const ExactVector u0 = project_orth(e, w);
    const Rational eps = dyadic_eps([&](const Rational& t) {
      return valid_separator(u0 - t * e, e, ep);
    });
    u = u0 - eps * e;
  } else if (G.sign() > 0) {
    // Spacelike span: tilt a plane-orthogonal timelike vector by
    // lam*e - mu*ep with lam = |c|+b, mu = |c|+a, which makes both products
    // strictly correct for any eps > 0.
    const ExactVector u0 = project_out_plane(w, e, ep);
    const ExactVector tilt = (abs(c) + b) * e - (abs(c) + a) * ep;
    const Rational eps = dyadic_eps([&](const Rational& t) {
      return valid_separator(u0 - t * tilt, e, ep);
    });
    u = u0 - eps * tilt;
  } else if (G.sign() < 0 && c.sign() < 0) {
    // Timelike span, difference-type: the normalized difference is timelike
    // future. The unit recipe u = e - ep works when it verifies; otherwise
    // the rational midpoint of the admissible coefficient ratios.
    if (valid_separator(e - ep, e, ep)) {
      u = e - ep;
    } else {
      u = (a * b + c * c) * e - (Rational(2) * a * abs(c)) * ep;
      if (!valid_separator(u, e, ep))
        throw InternalVerificationFailure("difference-type separator failed re-check");
    }
  } else if (G.sign() < 0) {
    // Timelike span, sum-type (c > 0): orientation of the normalized sum.
    const int sum_time = cmp_scaled_sqrt(e.time(), b, -ep.time(), a);
    if (sum_time > 0) {
      const ExactVector u0 = e + (c / b) * ep;  // P_orth(ep) applied to e
      const Rational eps = dyadic_eps([&](const Rational& t) {
        return valid_separator(u0 + t * ep, e, ep);
      });
      u = u0 + eps * ep;
    } else {
      const ExactVector u0 = -(ep + (c / a) * e);
      const Rational eps = dyadic_eps([&](const Rational& t) {
        return valid_separator(u0 - t * e, e, ep);
      });
      u = u0 - eps * e;
    }
  } else {
    // Lightlike span (G = 0, not parallel); c != 0.
    if (c.sign() < 0) {
      const ExactVector u0 = project_orth(ep, w);
      const Rational eps = dyadic_eps([&](const Rational& t) {
        return valid_separator(u0 + t * e, e, ep);
      });
      u = u0 + eps * e;
    } else {
      const int sum_time = cmp_scaled_sqrt(e.time(), b, -ep.time(), a);
      const ExactVector u0 =
          sum_time > 0 ? project_orth(ep, w) : project_orth(e, w);
      const Rational eps = dyadic_eps([&](const Rational& t) {
        return valid_separator(u0 - t * e, e, ep);
      });
      u = u0 - eps * e;
    }
  }
  if (!valid_separator(u, e, ep))
    throw InternalVerificationFailure("direction separator failed exact re-check");
  return u;
}

bool direction_in_cone_interior(const ExactVector& e, const DirectionCone& cone) {
  if (!is_spacelike(e)) return false;
  const Rational a = -msq(e);
  // e-hat - e_minus timelike future, scaled by sqrt(a):
  // msq(e - sqrt(a) e-) = a(msq(e-) - 1) + (-2 e.e-) sqrt(a).
  const ExactVector& em = cone.tip_past;
  const ExactVector& efu = cone.tip_future;
  const Rational p1 = a * (msq(em) - Rational(1));
  const Rational q1 = Rational(-2) * mdot(e, em);
  if (cmp_scaled_sqrt(q1, a, -p1, Rational(1)) <= 0) return false;
  if (cmp_scaled_sqrt(e.time(), Rational(1), em.time(), a) <= 0) return false;
  const Rational p2 = a * (msq(efu) - Rational(1));
  const Rational q2 = Rational(-2) * mdot(e, efu);
  if (cmp_scaled_sqrt(q2, a, -p2, Rational(1)) <= 0) return false;
  if (cmp_scaled_sqrt(efu.time(), a, e.time(), Rational(1)) <= 0) return false;
  return true;
}

bool point_in_open_cone(const ExactVector& y, const DirectionCone& cone) {
  return direction_in_cone_interior(y, cone);
}

DirectionCone make_direction_cone(const ExactVector& e, int level) {
  if (!is_spacelike(e))
    throw NonSpacelikeDirection("cone center must be spacelike");
  const int d = e.dim();
  const ExactVector w = ExactVector::time_axis(d);
  const Rational a = -msq(e);
  for (int lvl = level; lvl < level + 256; ++lvl) {
    const Rational rho = pow2(-(lvl + 2));
    // Rational lambda close to 1/sqrt(a): |lambda - 1/sqrt(a)| <= eta.
    const Rational eta = rho / (Rational(4) * (Rational(1) + a) *
                                (Rational(1) + abs(e.time())));
    Rational lo(0), hi = Rational(1) + Rational(1) / a;
    while (hi - lo > eta) {
      const Rational mid = (lo + hi) / Rational(2);
      if (mid * mid * a < Rational(1))
        lo = mid;
      else
        hi = mid;
    }
    const Rational lambda = (lo + hi) / Rational(2);
    DirectionCone cone{e, lambda * e - rho * w, lambda * e + rho * w};
    if (is_spacelike(cone.tip_past) && is_spacelike(cone.tip_future) &&
        direction_in_cone_interior(e, cone))
      return cone;
  }
  throw InternalVerificationFailure("direction cone construction did not converge");
}

bool tail_in_cone(const StringGeom& s, const Rational& from, const DirectionCone& cone) {
  // y(t) = x + t e. Strict spacelikeness of the whole tail first.
  const ExactVector& x = s.base;
  const ExactVector& e = s.dir;
  const Poly N({-msq(x), Rational(-2) * mdot(x, e), -msq(e)});  // -y.y > 0
  if (!positive_on_ray(N, from)) return false;

  // Closed patch membership: four conditions of the form
  // alpha(t) + beta(t) * sqrt(N(t)) >= 0.
  struct Cond {
    Poly alpha, beta;
  };
  const Poly ysq = Rational(-1) * N;                      // y.y
  const Poly y0({x.time(), e.time()});                    // y^0
  auto dotp = [&](const ExactVector& v) {                 // y.v as Poly
    return Poly({mdot(x, v), mdot(e, v)});
  };
  std::vector<Cond> conds;
  // y - nu e_minus in closed future cone.
  conds.push_back({(Rational(1) - msq(cone.tip_past)) * ysq,
                   Rational(-2) * dotp(cone.tip_past)});
  conds.push_back({y0, Poly::constant(-cone.tip_past.time())});
  // nu e_plus - y in closed future cone.
  conds.push_back({(Rational(1) - msq(cone.tip_future)) * ysq,
                   Rational(-2) * dotp(cone.tip_future)});
  conds.push_back({Rational(-1) * y0, Poly::constant(cone.tip_future.time())});

  std::vector<Poly> family{N};
  for (const Cond& c : conds) {
    family.push_back(c.alpha);
    family.push_back(c.beta);
    family.push_back(c.alpha * c.alpha - c.beta * c.beta * N);
  }
  for (const Rational& t : gap_samples(family, from)) {
    const Rational nv = N.eval(t);
    for (const Cond& c : conds) {
      // alpha + beta sqrt(nv) >= 0
      if (cmp_scaled_sqrt(c.beta.eval(t), nv, -c.alpha.eval(t), Rational(1)) < 0)
        return false;
    }
  }
  return true;
}

Rational tail_cut(const StringGeom& s, const DirectionCone& cone) {
  if (!direction_in_cone_interior(s.dir, cone))
    throw DirectionNotInCone("string direction not strictly inside the cone");
  Rational from(1);
  for (int k = 0; k < 200; ++k) {
    if (tail_in_cone(s, from, cone)) return from;
    from *= Rational(2);
  }
  throw InternalVerificationFailure("tail cut search did not converge");
}

}  // namespace causalchop
