#include <algorithm>

#include "causalchop/chop.hpp"
#include "causalchop/poly.hpp"

namespace causalchop {

const char* to_string(ChopBranch b) {
  switch (b) {
    case ChopBranch::MeetsLineSpacelikeSpan: return "meets_line_spacelike_span";
    case ChopBranch::MeetsLineCausalSpan: return "meets_line_causal_span";
    case ChopBranch::Collinear: return "collinear";
    case ChopBranch::NoMeetComparable: return "no_meet_comparable";
    case ChopBranch::IncomparableCut: return "incomparable_cut";
  }
  return "?";
}

namespace {

ExactVector project_out_plane(const ExactVector& v, const ExactVector& p,
                              const ExactVector& q) {
  const Rational gpp = msq(p), gqq = msq(q), gpq = mdot(p, q);
  const Rational det = gpp * gqq - gpq * gpq;
  const Rational vp = mdot(v, p), vq = mdot(v, q);
  const Rational alpha = (vp * gqq - vq * gpq) / det;
  const Rational beta = (gpp * vq - gpq * vp) / det;
  return v - alpha * p - beta * q;
}

Rational floor_of(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return Rational(mpq_class(f));
}

// Deterministic rational in the open set {phi > 0, s > 0}. The set is known
// nonempty; phi has degree <= 2.
Rational pick_feasible_param(const Poly& phi) {
  if (phi.degree() == 2 && phi.lead().sign() < 0) {
    // Concave: the feasible set is one open interval whose midpoint is the
    // (rational) vertex.
    const Rational sv = -phi.coeff(1) / (Rational(2) * phi.coeff(2));
    if (sv.sign() > 0 && phi.eval(sv).sign() > 0) {
      // Clamp to the dyadic of smallest denominator inside the interval.
      for (int k = 0; k <= 512; ++k) {
        const Rational lower = floor_of(sv * pow2(k)) * pow2(-k);
        const Rational upper = lower + pow2(-k);
        if (lower.sign() > 0 && phi.eval(lower).sign() > 0) return lower;
        if (upper.sign() > 0 && phi.eval(upper).sign() > 0) return upper;
      }
      throw InternalVerificationFailure("dyadic clamp failed in cut selection");
    }
    // Vertex not usable: the positive part of the interval hugs 0.
    Rational c(1, 2);
    for (int k = 0; k < 512; ++k) {
      if (phi.eval(c).sign() > 0) return c;
      c /= Rational(2);
    }
    throw InternalVerificationFailure("no feasible cut parameter found");
  }
  // Affine, constant, or convex phi: the feasible set contains arbitrarily
  // small or arbitrarily large parameters; interleaved dyadic scan.
  Rational up(1), down(1, 2);
  for (int k = 0; k < 512; ++k) {
    if (phi.eval(up).sign() > 0 && up.sign() > 0) return up;
    if (phi.eval(down).sign() > 0) return down;
    up *= Rational(2);
    down /= Rational(2);
  }
  throw InternalVerificationFailure("no feasible cut parameter found");
}

}  // namespace

TwoChopResult chop_two(const StringGeom& s, const StringGeom& sp) {
  if (!strings_disjoint(s, sp)) throw NotDisjoint("chop_two requires disjoint strings");
  const int d = s.base.dim();
  const ExactVector w = ExactVector::time_axis(d);
  const Region whole_s = Region::whole(s);
  const Region whole_sp = Region::whole(sp);

  TwoChopResult res{ChopBranch::NoMeetComparable, std::nullopt, std::nullopt};

  if (auto meet = meet_ray_line(s, sp)) {
    const SpanClass span = span_class(s.dir, sp.dir);
    if (span == SpanClass::DegenerateParallel || span == SpanClass::SpacelikeSpan) {
      res.branch = span == SpanClass::DegenerateParallel
                       ? ChopBranch::Collinear
                       : ChopBranch::MeetsLineSpacelikeSpan;
      const CompareResult rel = compare(whole_s, whole_sp);
      if (rel != CompareResult::SpacelikeSeparated)
        throw InternalVerificationFailure("spacelike-plane branch not spacelike separated");
      res.no_chop = TwoChopResult::NoChop{rel, std::nullopt};
      return res;
    }
    // Timelike or lightlike span: the Fig.-2 hyperplane through
    // a = x' - (t'/2) e' with u orthogonal to e decides the order.
    res.branch = ChopBranch::MeetsLineCausalSpan;
    const Rational tprime = -meet->second;  // > 0: meeting behind S'
    const ExactVector a_pt = sp.base - (tprime / Rational(2)) * sp.dir;
    const ExactVector u = project_orth(s.dir, w);
    Hyperplane sigma(a_pt, u);
    const Rational na = -msq(s.dir), nb = -msq(sp.dir), c = mdot(s.dir, sp.dir);
    bool first_later;
    if (c.sign() < 0) {
      // Normalized difference is causal; its orientation decides.
      first_later = cmp_scaled_sqrt(s.dir.time(), nb, sp.dir.time(), na) > 0;
    } else {
      // Normalized sum is causal; future-pointing sum puts S' later.
      first_later = cmp_scaled_sqrt(s.dir.time(), nb, -sp.dir.time(), na) < 0;
    }
    const Region& above = first_later ? whole_s : whole_sp;
    const Region& below = first_later ? whole_sp : whole_s;
    if (!region_above_hyperplane(above, sigma) || !region_below_hyperplane(below, sigma))
      throw InternalVerificationFailure("Fig.-2 hyperplane failed side re-check");
    if (!later_region(above, below))
      throw InternalVerificationFailure("meets-line order failed later_region re-check");
    res.no_chop = TwoChopResult::NoChop{compare(whole_s, whole_sp), std::move(sigma)};
    return res;
  }

  const CompareResult rel = compare(whole_s, whole_sp);
  if (rel != CompareResult::Incomparable) {
    res.branch = ChopBranch::NoMeetComparable;
    res.no_chop = TwoChopResult::NoChop{rel, std::nullopt};
    return res;
  }

  // Incomparable: cut S at a point spacelike separated from the whole line
  // of S'. Feasibility of parameter s is gram2(xi(s), e') > 0, a quadratic.
  res.branch = ChopBranch::IncomparableCut;
  const ExactVector K = s.base - sp.base;
  const Poly xi_sq({msq(K), Rational(2) * mdot(K, s.dir), msq(s.dir)});
  const Poly xi_ep({mdot(K, sp.dir), mdot(s.dir, sp.dir)});
  const Poly phi = msq(sp.dir) * xi_sq - xi_ep * xi_ep;
  const Rational cut = pick_feasible_param(phi);

  const ExactVector a_pt = s.at(cut);
  const ExactVector xi = a_pt - sp.base;
  const ExactVector pxi = project_orth(sp.dir, xi);
  const Rational xi_pxi = mdot(xi, pxi);
  if (xi_pxi.sign() >= 0)
    throw InternalVerificationFailure("cut point not in the line's causal complement");

  // Timelike future u orthogonal to span{xi, e'}, not orthogonal to e.
  ExactVector u = project_out_plane(w, xi, sp.dir);
  if (mdot(u, s.dir).is_zero()) {
    for (int axis = 0; axis < d && mdot(u, s.dir).is_zero(); ++axis) {
      std::vector<Rational> av(static_cast<size_t>(d));
      av[static_cast<size_t>(axis)] = Rational(1);
      const ExactVector pa = project_out_plane(ExactVector(std::move(av)), xi, sp.dir);
      if (mdot(pa, s.dir).is_zero()) continue;
      Rational lam(1, 2);
      for (int k = 0; k < 512; ++k) {
        const ExactVector cand = u + lam * pa;
        if (msq(cand).sign() > 0 && cand.time().sign() > 0 &&
            !mdot(cand, s.dir).is_zero()) {
          u = cand;
          break;
        }
        lam /= Rational(2);
      }
    }
    if (mdot(u, s.dir).is_zero())
      throw InternalVerificationFailure("could not tilt u off the e-orthogonal plane");
  }
  const int sigma_sign = mdot(u, s.dir).sign();

  // eps small enough that the sign of u.e survives and u+- stay timelike
  // future: largest dyadic 2^-k passing the exact re-check.
  auto eps_ok = [&](const Rational& t) {
    const ExactVector um = u - t * pxi;
    const ExactVector up = u + t * pxi;
    return mdot(um, s.dir).sign() == sigma_sign && msq(um).sign() > 0 &&
           um.time().sign() > 0 && mdot(up, s.dir).sign() == sigma_sign &&
           msq(up).sign() > 0 && up.time().sign() > 0;
  };
  Rational eps(1);
  bool found = false;
  for (int k = 0; k <= 64; ++k) {
    if (eps_ok(eps)) { found = true; break; }
    eps /= Rational(2);
  }
  if (!found) {
    // Direct bound fallback, then one exact re-check.
    const Rational b1 = abs(mdot(u, s.dir)) / (Rational(1) + abs(mdot(pxi, s.dir)));
    const Rational b2 = msq(u) / (Rational(1) + abs(xi_pxi));
    const Rational b3 = u.time() / (Rational(1) + abs(pxi.time()));
    eps = std::min(std::min(b1, b2), std::min(b3, Rational(1))) / Rational(2);
    if (!eps_ok(eps))
      throw InternalVerificationFailure("epsilon bound failed exact re-check");
  }

  const ExactVector um = u - eps * pxi;
  const ExactVector up = u + eps * pxi;
  const Rational delta = -eps * xi_pxi;  // > 0
  Hyperplane sigma1(sp.base + (delta / (Rational(2) * msq(um))) * um, um);
  Hyperplane sigma2(sp.base - (delta / (Rational(2) * msq(up))) * up, up);

  const Region finite = Region::piece(Piece(s, Rational(0), cut));
  const Region tail = Region::piece(Piece(s, cut, std::nullopt));
  const Region& later_piece = sigma_sign > 0 ? tail : finite;
  const Region& earlier_piece = sigma_sign > 0 ? finite : tail;

  if (!region_above_hyperplane(later_piece, sigma1) ||
      !region_below_hyperplane(whole_sp, sigma1) ||
      !region_above_hyperplane(whole_sp, sigma2) ||
      !region_below_hyperplane(earlier_piece, sigma2))
    throw InternalVerificationFailure("cut hyperplanes failed side re-check");
  if (!later_region(later_piece, whole_sp) || !later_region(whole_sp, earlier_piece))
    throw InternalVerificationFailure("cut relations failed later_region re-check");

  res.cut = TwoChopResult::Cut{cut, compare(finite, whole_sp), compare(tail, whole_sp),
                               std::move(sigma1), std::move(sigma2)};
  return res;
}

}  // namespace causalchop
