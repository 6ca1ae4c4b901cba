#pragma once

#include <string>
#include <vector>

#include "causalchop/chop.hpp"

namespace causalchop {

// A linear field factor: a vertex of the expansion, optionally restricted to
// one piece of the vertex's string. The label is an opaque tag for the weight
// function / species; no calculus is done on it.
struct FieldSymbol {
  int vertex = 0;   // 1-based
  int piece = -1;   // -1 = whole string
  std::string label = "phi";

  friend auto operator<=>(const FieldSymbol&, const FieldSymbol&) = default;
};

// A partial matching of {1..n}: every vertex emits exactly one line, either
// to a partner (internal) or to the exterior.
struct ContractionGraph {
  std::vector<std::pair<int, int>> internal;  // (s, r) with s < r, disjoint
  std::vector<int> external;                  // remaining vertices, ascending

  friend auto operator<=>(const ContractionGraph&, const ContractionGraph&) = default;
};

// Opaque propagator symbols. TwoPoint is the (order-sensitive) vacuum
// two-point symbol; Feynman is symmetric and symmetrized at construction;
// SegmentTwoPoint is the time-ordered two-point symbol of two pieces, written
// with the later piece first.
struct PropagatorSymbol {
  enum class Kind { TwoPoint, Feynman, SegmentTwoPoint };
  Kind kind = Kind::TwoPoint;
  int i = 0, j = 0;
  int alpha = -1, beta = -1;

  static PropagatorSymbol two_point(int i, int j) {
    return {Kind::TwoPoint, i, j, -1, -1};
  }
  static PropagatorSymbol feynman(int i, int j) {
    return {Kind::Feynman, std::min(i, j), std::max(i, j), -1, -1};
  }
  static PropagatorSymbol segment(int i, int a, int j, int b) {
    return {Kind::SegmentTwoPoint, i, j, a, b};
  }

  friend auto operator<=>(const PropagatorSymbol&, const PropagatorSymbol&) = default;
};

// Formal sum of terms coef * (product of propagator symbols) * :normal word:.
// Kept in canonical form: symbols sorted within terms, terms sorted by
// (number of internal lines, line lists, external word), like terms merged,
// zero coefficients dropped.
struct WickExpression {
  struct Term {
    Rational coef;
    std::vector<PropagatorSymbol> props;
    std::vector<FieldSymbol> normal;
  };
  std::vector<Term> terms;

  static WickExpression unit() {
    WickExpression e;
    e.terms.push_back({Rational(1), {}, {}});
    return e;
  }

  void canonicalize();
  friend bool operator==(const WickExpression& a, const WickExpression& b);
  std::string pretty() const;
};

WickExpression operator+(const WickExpression& a, const WickExpression& b);
WickExpression scaled(const Rational& c, const WickExpression& e);
// Termwise merge of two expressions: the product when no contractions
// between the factors are intended (e.g. a propagator-only scalar factor).
WickExpression tensor_merge(const WickExpression& a, const WickExpression& b);

// All partial matchings of {1..n}; |result| is the involution number I(n).
std::vector<ContractionGraph> enumerate_graphs(int n);

// Wick's theorem for an ORDERED product of field symbols: contraction symbols
// inherit the word order (the earlier factor becomes the left argument).
// Whole-string fields contract to TwoPoint, piece-labelled fields to
// SegmentTwoPoint.
WickExpression normal_order_product(const std::vector<FieldSymbol>& word);

// Closed-form time-ordered product: sum over graphs of Feynman symbols times
// the normal word. Requires the configuration off the large string diagonal.
WickExpression t_product_closed(const std::vector<StringGeom>& config);

// The chopping-based construction: chop, expand fields into piece sums, pull
// out latest members, normal-order with geometrically oriented segment
// symbols, and resum back to Feynman symbols.
WickExpression t_product_recursive(const std::vector<StringGeom>& config,
                                   const ChopOptions& opts = {});

// As above but starting from a given chopping (refined on demand when an
// iterated pull-out needs a latest member the chopping does not provide).
WickExpression t_product_with_chopping(const std::vector<StringGeom>& config,
                                       Chopping chopping, int refine_limit = 12);

// Axiom-T4 product of a later group and an earlier group: cross contractions
// become Feynman symbols. Both inputs must be in canonical form.
WickExpression t_factor_product(const WickExpression& later_part,
                                const WickExpression& earlier_part);

// True iff the recursive construction yields identical canonical expressions
// for the two choppings. Verifies the attached tables first when given.
bool chopping_independence_check(const std::vector<StringGeom>& config,
                                 const Chopping& a, const Chopping& b,
                                 const LatestTable* table_a = nullptr,
                                 const LatestTable* table_b = nullptr);

}  // namespace causalchop
