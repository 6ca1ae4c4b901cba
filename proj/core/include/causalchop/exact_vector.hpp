#pragma once

#include <initializer_list>
#include <vector>

#include "causalchop/rational.hpp"

namespace causalchop {

// A point or vector in d-dimensional Minkowski space, signature (+,-,...,-).
// Index 0 is the time component. Exact rational coordinates, d >= 2.
class ExactVector {
 public:
  explicit ExactVector(std::vector<Rational> coords) : c_(std::move(coords)) {
    if (c_.size() < 2) throw DimensionMismatch("vector dimension must be >= 2");
  }
  ExactVector(std::initializer_list<Rational> coords)
      : ExactVector(std::vector<Rational>(coords)) {}

  static ExactVector zero(int dim) {
    return ExactVector(std::vector<Rational>(static_cast<size_t>(dim)));
  }
  static ExactVector time_axis(int dim) {
    std::vector<Rational> c(static_cast<size_t>(dim));
    c[0] = Rational(1);
    return ExactVector(std::move(c));
  }

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const Rational& time() const { return c_[0]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend ExactVector operator+(const ExactVector& a, const ExactVector& b) {
    a.check_dim(b);
    std::vector<Rational> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return ExactVector(std::move(c));
  }
  friend ExactVector operator-(const ExactVector& a, const ExactVector& b) {
    a.check_dim(b);
    std::vector<Rational> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return ExactVector(std::move(c));
  }
  ExactVector operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return ExactVector(std::move(c));
  }
  friend ExactVector operator*(const Rational& s, const ExactVector& a) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x *= s;
    return ExactVector(std::move(c));
  }

  friend bool operator==(const ExactVector& a, const ExactVector& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const ExactVector& a, const ExactVector& b) {
    return !(a == b);
  }

  void check_dim(const ExactVector& other) const {
    if (dim() != other.dim())
      throw DimensionMismatch("vectors of dimension " + std::to_string(dim()) +
                              " and " + std::to_string(other.dim()));
  }

 private:
  std::vector<Rational> c_;
};

}  // namespace causalchop
