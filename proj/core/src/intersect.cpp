#include "causalchop/intersect.hpp"

namespace causalchop {

namespace {

struct PRange {
  std::optional<Rational> lo, hi;
  bool contains(const Rational& v) const {
    if (lo && v < *lo) return false;
    if (hi && v > *hi) return false;
    return true;
  }
};

// Solve x1 + s d1 = x2 + t d2 exactly with (s,t) restricted to the ranges.
// Returns one solution if any exists.
std::optional<std::pair<Rational, Rational>> solve_lines(
    const ExactVector& x1, const ExactVector& d1, const PRange& r1,
    const ExactVector& x2, const ExactVector& d2, const PRange& r2) {
  const ExactVector delta = x2 - x1;
  const int d = x1.dim();
  // Look for an independent row pair.
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Rational det = d1[i] * (-d2[j]) - (-d2[i]) * d1[j];
      if (det.is_zero()) continue;
      const Rational s = (delta[i] * (-d2[j]) - (-d2[i]) * delta[j]) / det;
      const Rational t = (d1[i] * delta[j] - d1[j] * delta[i]) / det;
      for (int k = 0; k < d; ++k)
        if (s * d1[k] - t * d2[k] != delta[k]) return std::nullopt;
      if (r1.contains(s) && r2.contains(t)) return std::make_pair(s, t);
      return std::nullopt;
    }
  }
  // Parallel directions: d2 = mu d1 (both nonzero).
  if (!parallel(d1, d2) || !parallel(d1, delta)) return std::nullopt;
  int pv = 0;
  while (d1[pv].is_zero()) ++pv;
  const Rational mu = d2[pv] / d1[pv];
  const Rational nu = delta[pv] / d1[pv];
  // Points coincide iff s = nu + mu t; intersect the induced t-interval.
  std::optional<Rational> tlo = r2.lo, thi = r2.hi;
  auto tighten_lo = [&](const Rational& v) { if (!tlo || v > *tlo) tlo = v; };
  auto tighten_hi = [&](const Rational& v) { if (!thi || v < *thi) thi = v; };
  if (mu.sign() > 0) {
    if (r1.lo) tighten_lo((*r1.lo - nu) / mu);
    if (r1.hi) tighten_hi((*r1.hi - nu) / mu);
  } else {
    if (r1.lo) tighten_hi((*r1.lo - nu) / mu);
    if (r1.hi) tighten_lo((*r1.hi - nu) / mu);
  }
  if (tlo && thi && *tlo > *thi) return std::nullopt;
  Rational t = tlo ? *tlo : (thi ? *thi : Rational(0));
  return std::make_pair(nu + mu * t, t);
}

PRange piece_range(const Piece& p) { return PRange{p.lo, p.hi}; }

// Is point p on the piece?
bool point_on_piece(const ExactVector& p, const Piece& pc) {
  const ExactVector delta = p - pc.parent.base;
  if (!parallel(pc.parent.dir, delta)) return false;
  int pv = 0;
  while (pc.parent.dir[pv].is_zero()) ++pv;
  const Rational s = delta[pv] / pc.parent.dir[pv];
  return piece_range(pc).contains(s);
}

}  // namespace

bool strings_disjoint(const StringGeom& s, const StringGeom& sp) {
  const PRange nonneg{Rational(0), std::nullopt};
  return !solve_lines(s.base, s.dir, nonneg, sp.base, sp.dir, nonneg).has_value();
}

std::optional<std::pair<int, int>> diagonal_pair(const std::vector<StringGeom>& config) {
  for (size_t i = 0; i < config.size(); ++i)
    for (size_t j = i + 1; j < config.size(); ++j)
      if (!strings_disjoint(config[i], config[j]))
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

bool on_large_diagonal(const std::vector<StringGeom>& config) {
  if (config.size() < 2)
    throw PreconditionViolated("large diagonal needs n >= 2 strings");
  return diagonal_pair(config).has_value();
}

bool regions_disjoint(const Region& a, const Region& b) {
  if (a.is_point() && b.is_point()) return a.as_point() != b.as_point();
  if (a.is_point()) return !point_on_piece(a.as_point(), b.as_piece());
  if (b.is_point()) return !point_on_piece(b.as_point(), a.as_piece());
  const Piece& pa = a.as_piece();
  const Piece& pb = b.as_piece();
  return !solve_lines(pa.parent.base, pa.parent.dir, piece_range(pa),
                      pb.parent.base, pb.parent.dir, piece_range(pb))
              .has_value();
}

std::optional<std::pair<Rational, Rational>> meet_ray_line(const StringGeom& s,
                                                           const StringGeom& sp) {
  const PRange nonneg{Rational(0), std::nullopt};
  const PRange all{std::nullopt, std::nullopt};
  return solve_lines(s.base, s.dir, nonneg, sp.base, sp.dir, all);
}

}  // namespace causalchop
