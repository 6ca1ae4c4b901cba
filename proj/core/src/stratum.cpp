#include "causalchop/stratum.hpp"

namespace causalchop {

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::OffDiagonal: return "OffDiagonal";
    case Stratum::Delta2_0: return "Delta2_0";
    case Stratum::Delta2_1a: return "Delta2_1a";
    case Stratum::Delta2_1b: return "Delta2_1b";
    case Stratum::Delta2_2: return "Delta2_2";
  }
  return "?";
}

std::optional<int> stratum_codimension(Stratum s) {
  switch (s) {
    case Stratum::OffDiagonal: return std::nullopt;
    case Stratum::Delta2_0: return 4;
    case Stratum::Delta2_1a: return 3;
    case Stratum::Delta2_1b: return 3;
    case Stratum::Delta2_2: return 2;
  }
  return std::nullopt;
}

namespace {

// x' = x + r e with r > 0?
bool on_open_ray(const ExactVector& x, const ExactVector& e, const ExactVector& xp) {
  const ExactVector delta = xp - x;
  if (!parallel(e, delta)) return false;
  int pv = 0;
  while (e[pv].is_zero()) ++pv;
  return (delta[pv] / e[pv]).sign() > 0;
}

}  // namespace

Stratum stratum(const ExactVector& x, const ExactVector& e, const ExactVector& xp,
                const ExactVector& ep) {
  const StringGeom s(x, e), sp(xp, ep);
  if (strings_disjoint(s, sp)) return Stratum::OffDiagonal;
  // The strata are disjoint by definition; the checks in this order only
  // guard degenerate solver output.
  if (x == xp) return Stratum::Delta2_0;
  if (on_open_ray(x, e, xp)) return Stratum::Delta2_1a;
  if (on_open_ray(xp, ep, x)) return Stratum::Delta2_1b;
  return Stratum::Delta2_2;
}

}  // namespace causalchop
