#pragma once

#include <optional>
#include <vector>

#include "causalchop/region.hpp"

namespace causalchop {

// Exact ray-ray disjointness: no solution of x + se = x' + te' with
// s, t >= 0.
bool strings_disjoint(const StringGeom& s, const StringGeom& sp);

// True iff some pair of the configuration intersects (the configuration lies
// on the large string diagonal). Requires n >= 2.
bool on_large_diagonal(const std::vector<StringGeom>& config);
// The first intersecting pair, if any.
std::optional<std::pair<int, int>> diagonal_pair(const std::vector<StringGeom>& config);

// Set-disjointness of two regions (points, segments, tails).
bool regions_disjoint(const Region& a, const Region& b);

// Does the ray S meet the full line through S' (including its backward
// extension)? Returns the parameters (t, tau) of the first such meeting,
// x + t e = x' + tau e', with t >= 0 and tau unrestricted. For collinear
// overlaps a representative solution is returned.
std::optional<std::pair<Rational, Rational>> meet_ray_line(const StringGeom& s,
                                                           const StringGeom& sp);

}  // namespace causalchop
