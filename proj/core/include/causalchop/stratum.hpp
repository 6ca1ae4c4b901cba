#pragma once

#include "causalchop/intersect.hpp"

namespace causalchop {

// Stratification of an ordered string pair: off the diagonal, or one of the
// disjoint submanifolds of the string diagonal.
enum class Stratum {
  OffDiagonal,
  Delta2_0,   // coincident bases
  Delta2_1a,  // x' in the relative interior of S(x,e)
  Delta2_1b,  // x in the relative interior of S(x',e')
  Delta2_2,   // interiors cross
};

const char* to_string(Stratum s);

// Codimension of the stratum (2, 3, 3, 4); none for OffDiagonal.
std::optional<int> stratum_codimension(Stratum s);

Stratum stratum(const ExactVector& x, const ExactVector& e, const ExactVector& xp,
                const ExactVector& ep);

}  // namespace causalchop
