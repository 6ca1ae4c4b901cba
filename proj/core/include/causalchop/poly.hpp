#pragma once

#include <optional>
#include <vector>

#include "causalchop/rational.hpp"

namespace causalchop {

// Univariate polynomial with exact rational coefficients, c[k] * x^k.
// Degree is small here (<= ~8); the representation is a dense vector with no
// trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rational v) { return Poly({std::move(v)}); }
  static Poly linear(Rational c0, Rational c1) { return Poly({std::move(c0), std::move(c1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  // Sign of p(x) as x -> +infinity.
  int sign_at_plus_inf() const { return is_zero() ? 0 : lead().sign(); }

  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);

  // Remainder of this / d (d nonzero).
  Poly rem(const Poly& d) const;

  Poly monic() const;
  static Poly gcd(Poly a, Poly b);
  Poly square_free() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Number of real roots of the square-free polynomial p in the half-open
// interval (a, b], by Sturm's theorem. b may be +infinity.
int sturm_count(const Poly& p, const Rational& a, const std::optional<Rational>& b);

// Root isolation for the distinct real roots of p: sorted, pairwise disjoint.
// Each entry is either an exact rational root (lo == hi) or an open interval
// (lo, hi) containing exactly one root, with p(lo) != 0 != p(hi).
std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& p);

// True iff p(t) > 0 for every t in [from, +inf).
bool positive_on_ray(const Poly& p, const Rational& from);

// True iff p(t) < 0 for every t in [from, +inf).
inline bool negative_on_ray(const Poly& p, const Rational& from) {
  return positive_on_ray(Rational(-1) * p, from);
}

// Rational sample points that, together with `from`, meet every maximal open
// subinterval of [from, inf) delimited by the real roots of the given
// polynomials: for each root r >= from a point just below and just above r
// (within the adjacent root-free gaps), plus one point beyond all roots.
std::vector<Rational> gap_samples(const std::vector<Poly>& polys, const Rational& from);

}  // namespace causalchop
