#pragma once

#include <map>
#include <optional>
#include <vector>

#include "causalchop/intersect.hpp"
#include "causalchop/order.hpp"

namespace causalchop {

// Cut parameters of one string: 0 = s0 < s1 < ... < sN (the leading 0 is
// implicit; `cuts` holds s1..sN). Pieces are the N consecutive segments plus
// the infinite tail [sN, inf).
struct Chopping {
  std::vector<std::vector<Rational>> cuts;  // one sorted list per string

  int num_pieces(int string_index) const {
    return static_cast<int>(cuts[static_cast<size_t>(string_index)].size()) + 1;
  }
  // Piece alpha of string i as a Region (alpha in [0, num_pieces)).
  Region piece(const std::vector<StringGeom>& config, int i, int alpha) const;
};

// For every piece-index tuple, the index of a latest member. Tuples are in
// lexicographic order.
struct LatestTable {
  std::vector<std::pair<std::vector<int>, int>> entries;
};

// Double cone of spacelike directions: the patch V+(tip_past) ^ V-(tip_future)
// of the unit hyperboloid around the (non-unit, rational) center direction.
struct DirectionCone {
  ExactVector center;
  ExactVector tip_past;    // e-
  ExactVector tip_future;  // e+
};

// Exact test that center/|center| lies strictly inside the cone's hyperboloid
// patch (decided with the scaled-sqrt comparator; no normalization needed).
bool direction_in_cone_interior(const ExactVector& e, const DirectionCone& cone);

// Construct a cone around direction e whose patch shrinks as level grows
// (tip offset 2^-level), with spacelike tips and e strictly inside.
DirectionCone make_direction_cone(const ExactVector& e, int level);

// Proof branch taken by chop_two (diagnostic; used to steer test corpora).
enum class ChopBranch {
  MeetsLineSpacelikeSpan,
  MeetsLineCausalSpan,
  Collinear,
  NoMeetComparable,
  IncomparableCut,
};
const char* to_string(ChopBranch b);

struct TwoChopResult {
  struct NoChop {
    CompareResult relation;
    std::optional<Hyperplane> witness;  // the Fig.-2 hyperplane when available
  };
  struct Cut {
    Rational cut;                 // cut parameter s* > 0 on the first string
    CompareResult finite_rel;     // compare(finite piece, S')
    CompareResult tail_rel;       // compare(tail, S')
    Hyperplane sigma1, sigma2;    // witnesses: later piece >= S1 >= S', S' >= S2 >= earlier piece
  };
  ChopBranch branch;
  std::optional<NoChop> no_chop;
  std::optional<Cut> cut;

  bool needs_cut() const { return cut.has_value(); }
};

// Constructive two-string chopping: either the strings are comparable as they
// stand (no cut), or one cut of S makes both pieces comparable with S'.
// Every claimed relation is re-verified with the exact decision procedure
// before returning.
TwoChopResult chop_two(const StringGeom& s, const StringGeom& sp);

// Timelike future u with u.e > 0 > u.e' for spacelike directions with
// e-hat later than e'-hat; the four constructive cases of the proof,
// generalized scale-invariantly to non-unit rational directions.
ExactVector direction_separator(const ExactVector& e, const ExactVector& ep);

// Smallest verified dyadic-doubling parameter s with x + [s,inf) e inside the
// closed cone R+ D-bar. Requires the direction of S strictly inside D.
Rational tail_cut(const StringGeom& s, const DirectionCone& cone);

// Is the whole tail x + [from,inf) e contained in the closed spacelike cone
// over the cone's patch? Exact, decided on polynomial coefficients.
bool tail_in_cone(const StringGeom& s, const Rational& from, const DirectionCone& cone);
// Pointwise membership of y in the open cone R+ D (strict inequalities).
bool point_in_open_cone(const ExactVector& y, const DirectionCone& cone);

struct ChopOptions {
  int refine_limit = 12;  // bisection rounds per segment
  int jobs = 1;
  // Also require a latest member for every sub-tuple of every piece tuple
  // (needed by the recursive Wick evaluator's iterated pull-out).
  bool hereditary = false;
};

// n-string chopping with latest-member certificate. Throws OnDiagonal or
// RefinementLimitExceeded.
std::pair<Chopping, LatestTable> chop_n(const std::vector<StringGeom>& config,
                                        const ChopOptions& opts = {});

struct VerifyReport {
  struct TupleCheck {
    std::vector<int> tuple;
    int index = -1;
    bool pass = false;
    std::string reason;
  };
  bool pass = false;
  std::vector<TupleCheck> checks;
  std::vector<std::string> structural_errors;  // MissingTuple etc.
};

// Independent re-verification of a chopping certificate: structure, cut
// validity, and every latest-member relation via the decision procedure.
VerifyReport verify_chopping(const std::vector<StringGeom>& config,
                             const Chopping& chopping, const LatestTable& table);

}  // namespace causalchop
