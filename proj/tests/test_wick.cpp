#include <doctest.h>

#include <algorithm>

#include "causalchop/wick.hpp"
#include "support/prng.hpp"
#include "support/vectors.hpp"

using namespace causalchop;
using namespace causalchop::testsupport;

namespace {

// Independent involution-number oracle: I(n) = I(n-1) + (n-1) I(n-2).
long involution_number(int n) {
  if (n <= 1) return 1;
  long a = 1, b = 1;  // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    const long c = b + (k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

// Relabel vertices of an expression through a permutation (1-based).
WickExpression relabel(const WickExpression& e, const std::vector<int>& perm) {
  WickExpression out = e;
  for (auto& t : out.terms) {
    for (auto& p : t.props) {
      const int i = perm[static_cast<size_t>(p.i - 1)];
      const int j = perm[static_cast<size_t>(p.j - 1)];
      if (p.kind == PropagatorSymbol::Kind::Feynman)
        p = PropagatorSymbol::feynman(i, j);
      else {
        p.i = i;
        p.j = j;
      }
    }
    for (auto& f : t.normal) f.vertex = perm[static_cast<size_t>(f.vertex - 1)];
  }
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("graph enumeration counts the involution numbers") {
  const long expected[6] = {1, 1, 2, 4, 10, 26};
  for (int n = 0; n <= 5; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(static_cast<long>(graphs.size()) == expected[n]);
    CHECK(static_cast<long>(graphs.size()) == involution_number(n));
    // Every vertex emits exactly one line.
    for (const auto& g : graphs) {
      std::vector<int> seen;
      for (const auto& [s, r] : g.internal) {
        CHECK(s < r);
        seen.push_back(s);
        seen.push_back(r);
      }
      for (int v : g.external) seen.push_back(v);
      std::sort(seen.begin(), seen.end());
      for (int v = 1; v <= n; ++v) CHECK(seen[static_cast<size_t>(v - 1)] == v);
    }
  }
}

TEST_CASE("normal ordering of ordered products") {
  const FieldSymbol f1{1, -1};
  const FieldSymbol f2{2, -1};

  const WickExpression single = normal_order_product({f1});
  REQUIRE(single.terms.size() == 1);
  CHECK(single.terms[0].props.empty());
  CHECK(single.terms[0].normal == std::vector<FieldSymbol>{f1});

  const WickExpression pair = normal_order_product({f1, f2});
  REQUIRE(pair.terms.size() == 2);
  // Canonical order puts the contraction-free term first.
  CHECK(pair.terms[0].props.empty());
  CHECK(pair.terms[0].normal.size() == 2);
  REQUIRE(pair.terms[1].props.size() == 1);
  CHECK(pair.terms[1].props[0] == PropagatorSymbol::two_point(1, 2));

  const WickExpression swapped = normal_order_product({f2, f1});
  REQUIRE(swapped.terms.size() == 2);
  CHECK(swapped.terms[1].props[0] == PropagatorSymbol::two_point(2, 1));
  CHECK(swapped.terms[0].normal == pair.terms[0].normal);
  CHECK_FALSE(pair == swapped);  // the contraction symbol is order-sensitive
}

TEST_CASE("bosonic commutator is central (CCR consistency)") {
  Prng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FieldSymbol> w;
    const int extra = static_cast<int>(rng.below(3));
    for (int k = 0; k < extra; ++k) w.push_back(FieldSymbol{3 + k, -1});
    const FieldSymbol fi{1, -1}, fj{2, -1};
    std::vector<FieldSymbol> wij = w, wji = w;
    wij.push_back(fi);
    wij.push_back(fj);
    wji.push_back(fj);
    wji.push_back(fi);
    const WickExpression lhs =
        normal_order_product(wij) + scaled(Rational(-1), normal_order_product(wji));
    WickExpression comm;
    comm.terms.push_back({Rational(1), {PropagatorSymbol::two_point(1, 2)}, {}});
    comm.terms.push_back({Rational(-1), {PropagatorSymbol::two_point(2, 1)}, {}});
    comm.canonicalize();
    const WickExpression rhs = tensor_merge(comm, normal_order_product(w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("closed T-product expansion") {
  CHECK(t_product_closed({}) == WickExpression::unit());

  const std::vector<StringGeom> two = {incomparable_s(), incomparable_sp()};
  const WickExpression e2 = t_product_closed(two);
  REQUIRE(e2.terms.size() == 2);
  CHECK(e2.terms[0].normal.size() == 2);
  CHECK(e2.terms[1].props[0] == PropagatorSymbol::feynman(1, 2));

  const WickExpression e3 = t_product_closed(fig1_cyclic());
  CHECK(e3.terms.size() == 4);

  CHECK_THROWS_AS(t_product_closed({StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})),
                                    StringGeom(V({0, 2, 0, 0}), V({0, 0, 1, 0}))}),
                  OnDiagonal);
}

TEST_CASE("recursive construction matches the closed form: comparable pair") {
  const std::vector<StringGeom> config = {
      StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})),
      StringGeom(V({0, 0, 2, 0}), V({0, 1, 0, 0}))};
  CHECK(t_product_recursive(config) == t_product_closed(config));
}

TEST_CASE("recursive construction matches the closed form: incomparable pair") {
  const std::vector<StringGeom> config = {incomparable_s(), incomparable_sp()};
  const WickExpression rec = t_product_recursive(config);
  const WickExpression closed = t_product_closed(config);
  CHECK(rec == closed);
}

TEST_CASE("recursive construction matches the closed form: Fig.1 triple") {
  const auto config = fig1_cyclic();
  CHECK(t_product_recursive(config) == t_product_closed(config));
}

TEST_CASE("chopping independence") {
  const std::vector<StringGeom> config = {incomparable_s(), incomparable_sp()};
  auto [chopping, table] = chop_n(config, ChopOptions{12, 1, true});

  SUBCASE("a chopping against its refinement") {
    Chopping refined = chopping;
    // Insert one extra cut in the middle of the first finite piece of S.
    const Rational first = refined.cuts[0].empty() ? Rational(2) : refined.cuts[0][0];
    refined.cuts[0].insert(refined.cuts[0].begin(), first / Rational(2));
    CHECK(chopping_independence_check(config, chopping, refined));
  }
  SUBCASE("two independently generated choppings") {
    Chopping other;
    other.cuts = {{Rational(5, 12), Rational(3, 4)}, {Rational(7)}};
    CHECK(chopping_independence_check(config, chopping, other));
  }
  SUBCASE("corrupted table is rejected before comparison") {
    LatestTable bad = table;
    REQUIRE_FALSE(bad.entries.empty());
    bad.entries[0].second = (bad.entries[0].second + 1) % 2;
    const bool flipped_valid =
        verify_chopping(config, chopping, bad).pass;
    if (!flipped_valid)
      CHECK_THROWS_AS(
          chopping_independence_check(config, chopping, chopping, &bad, nullptr),
          PreconditionViolated);
  }
}

TEST_CASE("T-products are symmetric under permutations up to relabeling") {
  const auto config = fig1_cyclic();
  const WickExpression base = t_product_recursive(config);
  // perm[i] = 1-based new label of original string i.
  const std::vector<std::vector<int>> perms = {{2, 3, 1}, {3, 1, 2}, {1, 3, 2}};
  for (const auto& perm : perms) {
    std::vector<StringGeom> permuted(config.size(), config[0]);
    for (size_t i = 0; i < config.size(); ++i)
      permuted[static_cast<size_t>(perm[i] - 1)] = config[i];
    CHECK(t_product_recursive(permuted) == relabel(base, perm));
    // The closed form is label-symmetric by construction.
    CHECK(t_product_closed(permuted) == relabel(t_product_closed(config), perm));
  }
}

TEST_CASE("factorization across a global split") {
  // Two strings far in the future of two others; the closed form factors
  // through the axiom-T4 product.
  const std::vector<StringGeom> config = {
      StringGeom(V({40, 0, 0, 0}), V({0, 1, 0, 0})),
      StringGeom(V({40, 0, 3, 0}), V({0, 1, 0, 0})),
      StringGeom(V({0, 0, 0, 0}), V({0, 0, 1, 0})),
      StringGeom(V({0, 3, 0, 0}), V({0, 0, 1, 0}))};
  // Hypothesis of the factorization axiom: each of the first two later than
  // each of the last two.
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j)
      REQUIRE(later_region(Region::whole(config[static_cast<size_t>(i)]),
                           Region::whole(config[static_cast<size_t>(j)])));

  const WickExpression whole = t_product_closed(config);
  const WickExpression later_part =
      t_product_closed({config[0], config[1]});  // vertices 1,2
  WickExpression earlier_part = t_product_closed({config[2], config[3]});
  earlier_part = relabel(earlier_part, {3, 4});  // shift vertices to 3,4
  CHECK(t_factor_product(later_part, earlier_part) == whole);
}

TEST_CASE("pretty printer emits readable fixtures") {
  const std::vector<StringGeom> two = {incomparable_s(), incomparable_sp()};
  const WickExpression e2 = t_product_closed(two);
  const std::string s = e2.pretty();
  CHECK(s.find(":phi(1)phi(2):") != std::string::npos);
  CHECK(s.find("<T phi(1)phi(2)>") != std::string::npos);
}
