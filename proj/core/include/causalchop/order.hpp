#pragma once

#include <optional>
#include <vector>

#include "causalchop/region.hpp"

namespace causalchop {

// x later than y: x - y outside the closed past cone of the origin.
bool later_point_point(const ExactVector& x, const ExactVector& y);

enum class HyperplaneSide { Above, On, Below };
const char* to_string(HyperplaneSide s);

// Sign of (z - a).u against the spacelike hyperplane a + u-perp.
HyperplaneSide later_vs_hyperplane(const ExactVector& z, const Hyperplane& sigma);

// Concrete parameters (s on R1, t on R2, absent for point sides) and the
// difference vector xi = z1(s) - z2(t), which lies in the closed past cone.
struct Witness {
  std::optional<Rational> s, t;
  ExactVector xi;
};

struct LaterDecision {
  bool later = false;
  std::optional<Witness> witness;  // present exactly when !later
};

// Decides R1 later R2: no pair (z1, z2) with z1 - z2 in the closed past
// cone. Exact case analysis over the parameter box: vertices of the feasible
// polygon, edge maxima, the interior critical point, and recession behavior
// on exact polynomial coefficients. Produces a witness on every negative
// answer.
LaterDecision decide_later(const Region& r1, const Region& r2);

inline bool later_region(const Region& r1, const Region& r2) {
  return decide_later(r1, r2).later;
}

// Four-way comparison; requires disjoint regions.
CompareResult compare(const Region& r1, const Region& r2);

// Smallest index i with R_i later than every other region, if any.
// Requires pairwise disjoint regions.
std::optional<size_t> latest_member(const std::vector<Region>& regions);

// Searches a finite deterministic candidate family for a spacelike hyperplane
// Sigma with R1 later Sigma later R2, re-verified exactly before returning.
// Sufficient but not complete: absence of a result does not refute R1 >= R2.
std::optional<Hyperplane> separating_hyperplane(const Region& r1, const Region& r2);

// Exact side conditions for a whole region against a hyperplane: every point
// strictly above (or strictly below), including tail behavior at infinity.
bool region_above_hyperplane(const Region& r, const Hyperplane& sigma);
bool region_below_hyperplane(const Region& r, const Hyperplane& sigma);

}  // namespace causalchop
