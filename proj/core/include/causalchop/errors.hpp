#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace causalchop {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonSpacelikeDirection : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroDenominator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two regions that were required to be disjoint are not.
struct OverlappingRegions : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotDisjoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configuration lies on the large string diagonal: some pair intersects.
struct OnDiagonal : std::runtime_error {
  OnDiagonal(std::string msg, int first, int second)
      : std::runtime_error(std::move(msg)), i(first), j(second) {}
  int i;
  int j;
};

struct RefinementLimitExceeded : std::runtime_error {
  RefinementLimitExceeded(std::string msg, std::vector<int> offending)
      : std::runtime_error(std::move(msg)), tuple(std::move(offending)) {}
  std::vector<int> tuple;
};

struct DirectionNotInCone : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A constructed witness failed its exact re-verification. Must never happen;
// indicates a defect in the construction, not in the input.
struct InternalVerificationFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::string where)
      : std::runtime_error(std::move(msg)), field(std::move(where)) {}
  std::string field;
};

}  // namespace causalchop
