#pragma once

#include <optional>
#include <variant>

#include "causalchop/minkowski.hpp"

namespace causalchop {

// A string S(x,e) = x + R0+ e with spacelike direction e (not required to be
// unit: rational unit vectors are scarce, all predicates are scale-invariant).
struct StringGeom {
  StringGeom(ExactVector base_point, ExactVector direction)
      : base(std::move(base_point)), dir(std::move(direction)) {
    base.check_dim(dir);
    if (!is_spacelike(dir))
      throw NonSpacelikeDirection("string direction must be spacelike nonzero");
  }
  ExactVector base;
  ExactVector dir;

  ExactVector at(const Rational& s) const { return base + s * dir; }

  friend bool operator==(const StringGeom& a, const StringGeom& b) {
    return a.base == b.base && a.dir == b.dir;
  }
};

// Parameter-interval piece of a string: x + [lo,hi] e, or the infinite tail
// x + [lo,inf) e when hi is absent.
struct Piece {
  Piece(StringGeom s, Rational lo_param, std::optional<Rational> hi_param)
      : parent(std::move(s)), lo(std::move(lo_param)), hi(std::move(hi_param)) {
    if (lo.sign() < 0) throw PreconditionViolated("piece lo must be >= 0");
    if (hi && !(lo < *hi)) throw PreconditionViolated("piece needs lo < hi");
  }
  StringGeom parent;
  Rational lo;
  std::optional<Rational> hi;  // nullopt = +infinity

  bool is_tail() const { return !hi.has_value(); }

  friend bool operator==(const Piece& a, const Piece& b) {
    return a.parent == b.parent && a.lo == b.lo && a.hi == b.hi;
  }
};

// A point or a piece; the two kinds of sets the posteriority engine decides.
class Region {
 public:
  static Region point(ExactVector p) { return Region(std::move(p)); }
  static Region piece(Piece p) { return Region(std::move(p)); }
  static Region whole(StringGeom s) {
    return Region(Piece(std::move(s), Rational(0), std::nullopt));
  }

  bool is_point() const { return std::holds_alternative<ExactVector>(v_); }
  const ExactVector& as_point() const { return std::get<ExactVector>(v_); }
  const Piece& as_piece() const { return std::get<Piece>(v_); }

  int dim() const {
    return is_point() ? as_point().dim() : as_piece().parent.base.dim();
  }

  friend bool operator==(const Region& a, const Region& b) { return a.v_ == b.v_; }

 private:
  explicit Region(ExactVector p) : v_(std::move(p)) {}
  explicit Region(Piece p) : v_(std::move(p)) {}
  std::variant<ExactVector, Piece> v_;
};

enum class CompareResult {
  SpacelikeSeparated,  // both later-relations hold
  FirstLater,
  SecondLater,
  Incomparable,  // neither holds
};

const char* to_string(CompareResult r);

}  // namespace causalchop
