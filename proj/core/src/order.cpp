#include "causalchop/order.hpp"

#include <algorithm>

#include "causalchop/intersect.hpp"

namespace causalchop {

const char* to_string(CompareResult r) {
  switch (r) {
    case CompareResult::SpacelikeSeparated: return "SpacelikeSeparated";
    case CompareResult::FirstLater: return "FirstLater";
    case CompareResult::SecondLater: return "SecondLater";
    case CompareResult::Incomparable: return "Incomparable";
  }
  return "?";
}

const char* to_string(HyperplaneSide s) {
  switch (s) {
    case HyperplaneSide::Above: return "Above";
    case HyperplaneSide::On: return "On";
    case HyperplaneSide::Below: return "Below";
  }
  return "?";
}

bool later_point_point(const ExactVector& x, const ExactVector& y) {
  return !in_closed_past_cone(x - y);
}

HyperplaneSide later_vs_hyperplane(const ExactVector& z, const Hyperplane& sigma) {
  const int s = mdot(z - sigma.base, sigma.normal).sign();
  if (s > 0) return HyperplaneSide::Above;
  if (s < 0) return HyperplaneSide::Below;
  return HyperplaneSide::On;
}

namespace {

struct Side {
  ExactVector base;
  std::optional<ExactVector> dir;  // absent for a point
  Rational lo;
  std::optional<Rational> hi;
};

Side make_side(const Region& r) {
  if (r.is_point())
    return Side{r.as_point(), std::nullopt, Rational(0), Rational(0)};
  const Piece& p = r.as_piece();
  return Side{p.parent.base, p.parent.dir, p.lo, p.hi};
}

// ---- one-parameter case -------------------------------------------------

// xi(tau) = K + tau * D over tau in [lo, hi or +inf); D spacelike, so
// f(tau) = xi.xi is strictly concave and never unbounded above.
std::optional<Rational> witness_param_1d(const ExactVector& K, const ExactVector& D,
                                         const Rational& lo,
                                         const std::optional<Rational>& hi) {
  const Rational a = msq(D);  // < 0
  const Rational b = Rational(2) * mdot(K, D);
  const Rational d0 = D.time();
  const Rational k0 = K.time();
  // Clip the probe constraint g = k0 + tau d0 <= 0 against [lo, hi].
  Rational alpha = lo;
  std::optional<Rational> beta = hi;
  if (d0.sign() > 0) {
    const Rational bound = -k0 / d0;
    if (!beta || bound < *beta) beta = bound;
  } else if (d0.sign() < 0) {
    const Rational bound = -k0 / d0;
    if (bound > alpha) alpha = bound;
  } else if (k0.sign() > 0) {
    return std::nullopt;  // g > 0 everywhere
  }
  if (beta && alpha > *beta) return std::nullopt;
  auto f_at = [&](const Rational& tau) { return msq(K + tau * D); };
  std::vector<Rational> cands{alpha};
  if (beta) cands.push_back(*beta);
  const Rational vertex = -b / (Rational(2) * a);
  if (vertex > alpha && (!beta || vertex < *beta)) cands.push_back(vertex);
  for (const Rational& tau : cands)
    if (f_at(tau).sign() >= 0) return tau;
  return std::nullopt;
}

// ---- two-parameter case -------------------------------------------------

struct Lin {
  Rational cs, ct, c0;  // cs*s + ct*t + c0 <= 0
  Rational eval(const Rational& s, const Rational& t) const {
    return cs * s + ct * t + c0;
  }
};

struct Quad {
  // f(s,t) = A s^2 + B s t + C t^2 + D s + E t + F
  Rational A, B, C, D, E, F;
  Rational eval(const Rational& s, const Rational& t) const {
    return A * s * s + B * s * t + C * t * t + D * s + E * t + F;
  }
  Rational q_form(const Rational& ds, const Rational& dt) const {
    return A * ds * ds + B * ds * dt + C * dt * dt;
  }
  std::pair<Rational, Rational> grad(const Rational& s, const Rational& t) const {
    return {Rational(2) * A * s + B * t + D, B * s + Rational(2) * C * t + E};
  }
  std::pair<Rational, Rational> hess_mul(const Rational& ds, const Rational& dt) const {
    return {Rational(2) * A * ds + B * dt, B * ds + Rational(2) * C * dt};
  }
};

struct Candidate2D {
  Rational s, t;
};

bool satisfies_all(const std::vector<Lin>& cons, const Rational& s, const Rational& t) {
  for (const Lin& L : cons)
    if (L.eval(s, t).sign() > 0) return false;
  return true;
}

// Doubling march along a recession (or unbounded-edge) direction until f >= 0.
// Only called once growth has been established from exact coefficients.
Candidate2D march(const Quad& f, const std::vector<Lin>& cons, Candidate2D p,
                  const Rational& ds, const Rational& dt) {
  Rational step(1);
  for (int k = 0; k < 512; ++k) {
    const Rational s = p.s + step * ds;
    const Rational t = p.t + step * dt;
    if (satisfies_all(cons, s, t) && f.eval(s, t).sign() >= 0) return {s, t};
    step *= Rational(2);
  }
  throw InternalVerificationFailure("recession march failed to realize a witness");
}

std::optional<Candidate2D> witness_param_2d(const ExactVector& K, const ExactVector& E1,
                                            const ExactVector& E2, const Rational& lo1,
                                            const std::optional<Rational>& hi1,
                                            const Rational& lo2,
                                            const std::optional<Rational>& hi2) {
  const Quad f{msq(E1),
               Rational(-2) * mdot(E1, E2),
               msq(E2),
               Rational(2) * mdot(K, E1),
               Rational(-2) * mdot(K, E2),
               msq(K)};
  const Lin probe{E1.time(), -E2.time(), K.time()};
  std::vector<Lin> cons;
  cons.push_back({Rational(-1), Rational(0), lo1});
  if (hi1) cons.push_back({Rational(1), Rational(0), -*hi1});
  cons.push_back({Rational(0), Rational(-1), lo2});
  if (hi2) cons.push_back({Rational(0), Rational(1), -*hi2});
  if (probe.cs.is_zero() && probe.ct.is_zero()) {
    // Constant probe: xi0 never changes sign over the box.
    if (probe.c0.sign() > 0) return std::nullopt;
  } else {
    cons.push_back(probe);
  }

  // Vertices of the feasible polygon.
  std::vector<Candidate2D> vertices;
  for (size_t i = 0; i < cons.size(); ++i) {
    for (size_t j = i + 1; j < cons.size(); ++j) {
      const Rational det = cons[i].cs * cons[j].ct - cons[j].cs * cons[i].ct;
      if (det.is_zero()) continue;
      const Rational s = (-cons[i].c0 * cons[j].ct + cons[j].c0 * cons[i].ct) / det;
      const Rational t = (-cons[i].cs * cons[j].c0 + cons[j].cs * cons[i].c0) / det;
      if (satisfies_all(cons, s, t)) vertices.push_back({s, t});
    }
  }
  if (vertices.empty()) return std::nullopt;  // feasible set empty
  std::sort(vertices.begin(), vertices.end(), [](const Candidate2D& a, const Candidate2D& b) {
    return a.s != b.s ? a.s < b.s : a.t < b.t;
  });
  for (const Candidate2D& v : vertices)
    if (f.eval(v.s, v.t).sign() >= 0) return v;

  // Edge analysis: interior critical points and behavior at infinity.
  for (size_t i = 0; i < cons.size(); ++i) {
    const Lin& Li = cons[i];
    Rational s0, t0;
    if (!Li.ct.is_zero()) {
      s0 = Rational(0);
      t0 = -Li.c0 / Li.ct;
    } else {
      s0 = -Li.c0 / Li.cs;
      t0 = Rational(0);
    }
    const Rational ds = Li.ct, dt = -Li.cs;  // direction along the line
    std::optional<Rational> ta, tb;
    bool infeasible = false;
    for (size_t j = 0; j < cons.size(); ++j) {
      if (j == i) continue;
      const Rational slope = cons[j].cs * ds + cons[j].ct * dt;
      const Rational at0 = cons[j].eval(s0, t0);
      if (slope.is_zero()) {
        if (at0.sign() > 0) { infeasible = true; break; }
        continue;
      }
      const Rational bound = -at0 / slope;
      if (slope.sign() > 0) {
        if (!tb || bound < *tb) tb = bound;
      } else {
        if (!ta || bound > *ta) ta = bound;
      }
    }
    if (infeasible || (ta && tb && *ta > *tb)) continue;
    const Rational aE = f.q_form(ds, dt);
    const auto [gs, gt] = f.grad(s0, t0);
    const Rational bE = gs * ds + gt * dt;
    if (!aE.is_zero()) {
      const Rational tc = -bE / (Rational(2) * aE);
      if ((!ta || tc > *ta) && (!tb || tc < *tb)) {
        const Rational s = s0 + tc * ds, t = t0 + tc * dt;
        if (satisfies_all(cons, s, t) && f.eval(s, t).sign() >= 0)
          return Candidate2D{s, t};
      }
    }
    // Unbounded ends of the edge.
    if (!tb && (aE.sign() > 0 || (aE.is_zero() && bE.sign() > 0))) {
      const Rational start = ta ? *ta : Rational(0);
      return march(f, cons, {s0 + start * ds, t0 + start * dt}, ds, dt);
    }
    if (!ta && (aE.sign() > 0 || (aE.is_zero() && bE.sign() < 0))) {
      const Rational start = tb ? *tb : Rational(0);
      return march(f, cons, {s0 + start * ds, t0 + start * dt}, -ds, -dt);
    }
  }

  // Interior critical point (maximum when f is concave; evaluating the saddle
  // too is sound and needed when a causal component sits strictly inside).
  const Rational detH = Rational(4) * f.A * f.C - f.B * f.B;
  if (!detH.is_zero()) {
    const Rational s = (f.B * f.E - Rational(2) * f.C * f.D) / detH;
    const Rational t = (f.B * f.D - Rational(2) * f.A * f.E) / detH;
    if (satisfies_all(cons, s, t) && f.eval(s, t).sign() >= 0)
      return Candidate2D{s, t};
  }

  // Recession analysis on exact coefficients.
  std::vector<std::pair<Rational, Rational>> gens;
  if (!hi1) gens.emplace_back(Rational(1), Rational(0));
  if (!hi2) gens.emplace_back(Rational(0), Rational(1));
  if (gens.empty()) return std::nullopt;
  const Lin& G = probe;
  auto glin = [&](const Rational& ds, const Rational& dt) {
    return G.cs * ds + G.ct * dt;
  };
  std::vector<std::pair<Rational, Rational>> rays;
  if (gens.size() == 1) {
    if (glin(gens[0].first, gens[0].second).sign() <= 0) rays.push_back(gens[0]);
  } else {
    const bool ok1 = glin(Rational(1), Rational(0)).sign() <= 0;
    const bool ok2 = glin(Rational(0), Rational(1)).sign() <= 0;
    if (ok1 && ok2) {
      rays.emplace_back(Rational(1), Rational(0));
      rays.emplace_back(Rational(0), Rational(1));
    } else if (ok1 || ok2) {
      rays.push_back(ok1 ? gens[0] : gens[1]);
      // Boundary direction of the probe constraint inside the quadrant.
      const Rational bs = G.ct, bt = -G.cs;
      if (bs.sign() >= 0 && bt.sign() >= 0 && !(bs.is_zero() && bt.is_zero()))
        rays.emplace_back(bs, bt);
      else if (bs.sign() <= 0 && bt.sign() <= 0 && !(bs.is_zero() && bt.is_zero()))
        rays.emplace_back(-bs, -bt);
    }
  }
  if (rays.empty()) return std::nullopt;
  const Candidate2D& base = vertices.front();
  auto try_ray = [&](const Rational& ds, const Rational& dt)
      -> std::optional<Candidate2D> {
    const Rational qv = f.q_form(ds, dt);
    if (qv.sign() > 0) return march(f, cons, base, ds, dt);
    if (qv.is_zero()) {
      const auto [h1, h2] = f.hess_mul(ds, dt);
      if (h1.is_zero() && h2.is_zero()) {
        const auto [gs, gt] = f.grad(base.s, base.t);
        if ((gs * ds + gt * dt).sign() > 0) return march(f, cons, base, ds, dt);
      }
    }
    return std::nullopt;
  };
  if (rays.size() == 1) return try_ray(rays[0].first, rays[0].second);
  // Maximize q over the segment between the two extreme rays; any interior
  // maximizer is rational.
  const auto& [a1, b1] = rays[0];
  const auto& [a2, b2] = rays[1];
  std::vector<Rational> lambdas{Rational(0), Rational(1)};
  // q((1-l)d1 + l d2) = q2 l^2 + q1 l + q0
  const Rational q0 = f.q_form(a1, b1);
  const Rational qfull = f.q_form(a2, b2);
  const Rational qmix = f.q_form(a1 + a2, b1 + b2);  // q(d1 + d2)
  // From q(d1+d2) = q(d1) + q(d2) + bilinear: recover the quadratic in l.
  const Rational cross = qmix - q0 - qfull;  // 2 * B(d1, d2)
  const Rational q2 = q0 + qfull - qmix + cross;  // == q(d2 - d1)... see below
  // q((1-l)d1 + l d2) = q0 + l*(cross - 2q0 + ... ) -- derive directly:
  // = (1-l)^2 q0 + l^2 qfull + l(1-l) cross
  // = l^2 (q0 + qfull - cross) + l (cross - 2 q0) + q0
  const Rational A2 = q0 + qfull - cross;
  const Rational A1 = cross - Rational(2) * q0;
  if (!A2.is_zero()) {
    const Rational lc = -A1 / (Rational(2) * A2);
    if (lc > Rational(0) && lc < Rational(1)) lambdas.push_back(lc);
  }
  for (const Rational& l : lambdas) {
    const Rational ds = (Rational(1) - l) * a1 + l * a2;
    const Rational dt = (Rational(1) - l) * b1 + l * b2;
    if (ds.is_zero() && dt.is_zero()) continue;
    if (auto w = try_ray(ds, dt)) return w;
  }
  (void)q2;
  return std::nullopt;
}

}  // namespace

LaterDecision decide_later(const Region& r1, const Region& r2) {
  if (r1.dim() != r2.dim())
    throw DimensionMismatch("regions of different dimension");
  const Side a = make_side(r1);
  const Side b = make_side(r2);
  const ExactVector K0 = a.base - b.base;

  LaterDecision out;
  auto fail = [&](std::optional<Rational> s, std::optional<Rational> t) {
    ExactVector z1 = a.dir ? a.base + *s * *a.dir : a.base;
    ExactVector z2 = b.dir ? b.base + *t * *b.dir : b.base;
    out.later = false;
    out.witness = Witness{std::move(s), std::move(t), z1 - z2};
  };

  if (!a.dir && !b.dir) {
    if (in_closed_past_cone(K0))
      fail(std::nullopt, std::nullopt);
    else
      out.later = true;
    return out;
  }
  if (a.dir && !b.dir) {
    if (auto tau = witness_param_1d(K0, *a.dir, a.lo, a.hi))
      fail(*tau, std::nullopt);
    else
      out.later = true;
    return out;
  }
  if (!a.dir && b.dir) {
    if (auto tau = witness_param_1d(K0, -*b.dir, b.lo, b.hi))
      fail(std::nullopt, *tau);
    else
      out.later = true;
    return out;
  }
  if (auto w = witness_param_2d(K0, *a.dir, *b.dir, a.lo, a.hi, b.lo, b.hi))
    fail(w->s, w->t);
  else
    out.later = true;
  return out;
}

CompareResult compare(const Region& r1, const Region& r2) {
  if (!regions_disjoint(r1, r2))
    throw OverlappingRegions("compare requires disjoint regions");
  const bool ab = later_region(r1, r2);
  const bool ba = later_region(r2, r1);
  if (ab && ba) return CompareResult::SpacelikeSeparated;
  if (ab) return CompareResult::FirstLater;
  if (ba) return CompareResult::SecondLater;
  return CompareResult::Incomparable;
}

std::optional<size_t> latest_member(const std::vector<Region>& regions) {
  for (size_t i = 0; i < regions.size(); ++i)
    for (size_t j = i + 1; j < regions.size(); ++j)
      if (!regions_disjoint(regions[i], regions[j]))
        throw OverlappingRegions("latest_member requires pairwise disjoint regions");
  for (size_t i = 0; i < regions.size(); ++i) {
    bool all = true;
    for (size_t j = 0; j < regions.size() && all; ++j)
      if (j != i && !later_region(regions[i], regions[j])) all = false;
    if (all) return i;
  }
  return std::nullopt;
}

}  // namespace causalchop
