#include "causalchop/poly.hpp"

#include <algorithm>

namespace causalchop {

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(long(k)) * c_[k];
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  return a + Rational(-1) * b;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> c(p.c_);
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly Poly::rem(const Poly& d) const {
  if (d.is_zero()) throw ZeroDenominator("polynomial division by zero");
  std::vector<Rational> r(c_);
  const int dd = d.degree();
  while (static_cast<int>(r.size()) - 1 >= dd) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (static_cast<int>(r.size()) - 1 < dd) break;
    const Rational q = r.back() / d.lead();
    const size_t shift = r.size() - 1 - static_cast<size_t>(dd);
    for (size_t k = 0; k < d.c_.size(); ++k) r[shift + k] -= q * d.c_[k];
    r.pop_back();
  }
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return (Rational(1) / lead()) * *this;
}

namespace {

// Scale by a positive rational so the coefficients become coprime integers.
// Sign-preserving, which keeps Sturm chains valid and Euclid steps cheap.
Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class denom_lcm = 1;
  for (const Rational& c : p.coeffs())
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const Rational& c : p.coeffs()) {
    mpz_class scaled = c.num() * (denom_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  const Rational scale(denom_lcm, num_gcd);  // positive
  return scale * p;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  a = primitive(a);
  b = primitive(b);
  while (!b.is_zero()) {
    Poly r = primitive(a.rem(b));
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Exact quotient a / d, valid when d divides a.
Poly divide_exact(const Poly& a, const Poly& d) {
  if (a.is_zero()) return Poly();
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(a.coeffs().size() - d.coeffs().size() + 1);
  const int dd = d.degree();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const Rational c = r[static_cast<size_t>(k + dd)] / d.lead();
    q[static_cast<size_t>(k)] = c;
    for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(k + j)] -= c * d.coeff(j);
  }
  return Poly(std::move(q));
}

}  // namespace

Poly Poly::square_free() const {
  if (is_zero()) return Poly();
  if (degree() <= 1) return monic();
  const Poly g = gcd(*this, derivative());
  if (g.degree() < 1) return monic();
  return divide_exact(*this, g).monic();
}

namespace {

// Signs of the Sturm chain at a point (or at +inf when x is empty).
int sign_variations(const std::vector<Poly>& chain, const std::optional<Rational>& x) {
  int var = 0;
  int prev = 0;
  for (const Poly& p : chain) {
    const int s = x ? p.sign_at(*x) : p.sign_at_plus_inf();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(primitive(p));
  chain.push_back(primitive(p.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() >= 0) {
    Poly r = Rational(-1) * chain[chain.size() - 2].rem(chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive(std::move(r)));
  }
  return chain;
}

}  // namespace

int sturm_count(const Poly& p, const Rational& a, const std::optional<Rational>& b) {
  if (p.is_zero() || p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& raw) {
  std::vector<std::pair<Rational, Rational>> out;
  if (raw.is_zero() || raw.degree() == 0) return out;
  const Poly p = raw.square_free();
  // Cauchy root bound.
  Rational bound(1);
  for (int k = 0; k < p.degree(); ++k) {
    const Rational m = Rational(1) + abs(p.coeff(k)) / abs(p.lead());
    if (m > bound) bound = m;
  }
  const auto chain = sturm_chain(p);
  auto count = [&](const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, std::optional<Rational>(b));
  };
  struct Seg { Rational lo, hi; int n; };
  std::vector<Seg> work;
  // Endpoints strictly outside the root bound, hence not roots themselves.
  work.push_back({-bound - Rational(1), bound + Rational(1),
                  count(-bound - Rational(1), bound + Rational(1))});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1 && p.sign_at(s.lo) != 0 && p.sign_at(s.hi) != 0) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    const Rational mid = (s.lo + s.hi) / Rational(2);
    if (p.sign_at(mid) == 0) {
      out.emplace_back(mid, mid);
      // Exclude the exact root from both halves with a root-free margin.
      Rational eps = (s.hi - s.lo) / Rational(4);
      while (p.sign_at(mid - eps) == 0 || p.sign_at(mid + eps) == 0 ||
             count(mid - eps, mid + eps) > 1)
        eps /= Rational(2);
      const int nl = count(s.lo, mid - eps);
      const int nr = count(mid + eps, s.hi);
      if (nl > 0) work.push_back({s.lo, mid - eps, nl});
      if (nr > 0) work.push_back({mid + eps, s.hi, nr});
    } else {
      const int nl = count(s.lo, mid);
      if (nl > 0) work.push_back({s.lo, mid, nl});
      if (s.n - nl > 0) work.push_back({mid, s.hi, s.n - nl});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool positive_on_ray(const Poly& p, const Rational& from) {
  if (p.is_zero()) return false;
  if (p.sign_at(from) <= 0) return false;
  return sturm_count(p.square_free(), from, std::nullopt) == 0;
}

std::vector<Rational> gap_samples(const std::vector<Poly>& polys, const Rational& from) {
  Poly prod = Poly::constant(Rational(1));
  for (const Poly& p : polys)
    if (!p.is_zero() && p.degree() >= 1) prod = prod * p.square_free();
  std::vector<Rational> samples{from};
  if (prod.degree() < 1) return samples;
  const auto roots = isolate_roots(prod);
  Rational beyond = from;
  for (size_t i = 0; i < roots.size(); ++i) {
    const auto& [lo, hi] = roots[i];
    if (hi < from) continue;
    if (lo > from) samples.push_back(lo);
    Rational above;
    if (lo == hi) {
      // Exact rational root: pick a point strictly between it and the next
      // isolating interval (root-free by disjointness of the intervals).
      const Rational next_lo =
          i + 1 < roots.size() ? roots[i + 1].first : lo + Rational(2);
      above = (lo + next_lo) / Rational(2);
    } else {
      above = hi;
    }
    if (above > from) samples.push_back(above);
    if (above > beyond) beyond = above;
  }
  samples.push_back(beyond + Rational(1));
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return samples;
}

}  // namespace causalchop
