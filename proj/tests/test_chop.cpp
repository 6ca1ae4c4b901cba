#include <doctest.h>

#include "causalchop/chop.hpp"
#include "support/prng.hpp"
#include "support/vectors.hpp"

using namespace causalchop;
using namespace causalchop::testsupport;

TEST_CASE("exact ray-ray disjointness") {
  // x' = x + 2e lies on S.
  CHECK_FALSE(strings_disjoint(StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})),
                               StringGeom(V({0, 2, 0, 0}), V({0, 0, 1, 0}))));
  // y-coordinates 1 vs 0 never meet.
  CHECK(strings_disjoint(incomparable_s(), incomparable_sp()));
  const StringGeom s(V({0, 0, 0, 0}), V({0, 1, 0, 0}));
  CHECK_FALSE(strings_disjoint(s, s));
}

TEST_CASE("large diagonal detection") {
  const StringGeom s(V({0, 0, 0, 0}), V({0, 1, 0, 0}));
  CHECK(on_large_diagonal({s, s}));
  const std::vector<StringGeom> parallel = {
      StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})),
      StringGeom(V({0, 0, 1, 0}), V({0, 1, 0, 0})),
      StringGeom(V({0, 0, 2, 0}), V({0, 1, 0, 0}))};
  CHECK_FALSE(on_large_diagonal(parallel));
  // Crossing pair: interiors meet at x + 1e = x' + 1e'.
  CHECK(on_large_diagonal({StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})),
                           StringGeom(V({0, 1, -1, 0}), V({0, 0, 1, 0}))}));
}

TEST_CASE("chop_two cuts the incomparable fixture") {
  const StringGeom s = incomparable_s();
  const StringGeom sp = incomparable_sp();
  const TwoChopResult res = chop_two(s, sp);
  CHECK(res.branch == ChopBranch::IncomparableCut);
  REQUIRE(res.needs_cut());
  // Feasible interval is (1/3, 1); the dyadic clamp of the midpoint is 1/2.
  CHECK(res.cut->cut == Q(1, 2));
  CHECK(res.cut->finite_rel == CompareResult::FirstLater);
  CHECK(res.cut->tail_rel == CompareResult::SecondLater);
  // Independent re-verification of the recorded relations.
  const Region finite = Region::piece(Piece(s, Q(0), res.cut->cut));
  const Region tail = Region::piece(Piece(s, res.cut->cut, std::nullopt));
  const Region whole_sp = Region::whole(sp);
  CHECK(later_region(finite, whole_sp));
  CHECK(later_region(whole_sp, tail));
  CHECK(region_above_hyperplane(finite, res.cut->sigma1));
  CHECK(region_below_hyperplane(whole_sp, res.cut->sigma1));
  CHECK(region_above_hyperplane(whole_sp, res.cut->sigma2));
  CHECK(region_below_hyperplane(tail, res.cut->sigma2));
}

TEST_CASE("chop_two: disjoint rays in one spacelike 2-plane need no cut") {
  // S meets the line of S' behind its base; both live in the spacelike
  // plane t = 0.
  const StringGeom s(V({0, 0, 0, 0}), V({0, 1, 0, 0}));
  const StringGeom sp(V({0, 2, 1, 0}), V({0, 0, 1, 0}));
  REQUIRE(strings_disjoint(s, sp));
  const TwoChopResult res = chop_two(s, sp);
  CHECK(res.branch == ChopBranch::MeetsLineSpacelikeSpan);
  CHECK_FALSE(res.needs_cut());
  CHECK(res.no_chop->relation == CompareResult::SpacelikeSeparated);
}

TEST_CASE("chop_two: meets-line causal span resolves by the Fig.-2 hyperplane") {
  const StringGeom s(V({0, 0, 0, 0}), ExactVector{Q(3, 4), Q(5, 4), Q(0), Q(0)});
  const StringGeom sp(ExactVector{Q(-3, 4), Q(15, 4), Q(0), Q(0)},
                      ExactVector{Q(-3, 4), Q(5, 4), Q(0), Q(0)});
  REQUIRE(strings_disjoint(s, sp));
  const TwoChopResult res = chop_two(s, sp);
  CHECK(res.branch == ChopBranch::MeetsLineCausalSpan);
  REQUIRE_FALSE(res.needs_cut());
  CHECK(res.no_chop->relation == CompareResult::FirstLater);
  REQUIRE(res.no_chop->witness.has_value());
  const Hyperplane& sigma = *res.no_chop->witness;
  CHECK(sigma.base == ExactVector{Q(0), Q(5, 2), Q(0), Q(0)});
  CHECK(sigma.normal == ExactVector{Q(25, 16), Q(15, 16), Q(0), Q(0)});
  CHECK(mdot(sigma.normal, s.dir).is_zero());
}

TEST_CASE("chop_two is deterministic") {
  const TwoChopResult a = chop_two(incomparable_s(), incomparable_sp());
  const TwoChopResult b = chop_two(incomparable_s(), incomparable_sp());
  REQUIRE(a.needs_cut());
  REQUIRE(b.needs_cut());
  CHECK(a.cut->cut == b.cut->cut);
  CHECK(a.cut->sigma1.base == b.cut->sigma1.base);
  CHECK(a.cut->sigma1.normal == b.cut->sigma1.normal);
  CHECK(a.cut->sigma2.base == b.cut->sigma2.base);
  CHECK(a.cut->sigma2.normal == b.cut->sigma2.normal);
}

TEST_CASE("chop_two rejects intersecting strings") {
  const StringGeom s(V({0, 0, 0, 0}), V({0, 1, 0, 0}));
  CHECK_THROWS_AS(chop_two(s, StringGeom(V({0, 2, 0, 0}), V({0, 0, 1, 0}))),
                  NotDisjoint);
}

TEST_CASE("direction separator: the four constructive cases") {
  auto check_valid = [](const ExactVector& u, const ExactVector& e,
                        const ExactVector& ep) {
    CHECK(msq(u).sign() > 0);
    CHECK(u.time().sign() > 0);
    CHECK(mdot(u, e).sign() > 0);
    CHECK(mdot(u, ep).sign() < 0);
  };
  SUBCASE("antiparallel") {
    const ExactVector e = V({0, 1, 0, 0});
    const ExactVector ep = V({0, -1, 0, 0});
    const ExactVector u = direction_separator(e, ep);
    check_valid(u, e, ep);
    CHECK(u == ExactVector{Q(1), Q(-1, 2), Q(0), Q(0)});
  }
  SUBCASE("timelike span, difference future (unit pair)") {
    const ExactVector e{Q(3, 4), Q(5, 4), Q(0), Q(0)};
    const ExactVector ep{Q(-3, 4), Q(5, 4), Q(0), Q(0)};
    CHECK(mdot(e, ep) == Q(-17, 8));
    const ExactVector u = direction_separator(e, ep);
    check_valid(u, e, ep);
    CHECK(u == e - ep);  // the paper's unit recipe verifies as-is
    CHECK(u == ExactVector{Q(3, 2), Q(0), Q(0), Q(0)});
  }
  SUBCASE("spacelike span") {
    const ExactVector e = V({0, 1, 0, 0});
    const ExactVector ep = V({0, 0, 1, 0});
    const ExactVector u = direction_separator(e, ep);
    check_valid(u, e, ep);
    CHECK(u == ExactVector{Q(1), Q(-1, 2), Q(1, 2), Q(0)});
  }
  SUBCASE("random coverage of all cases") {
    Prng rng(2024);
    int sep_count[4] = {0, 0, 0, 0};
    int trials = 0;
    while (trials < 200) {
      ExactVector e = rng.spacelike(4);
      ExactVector ep = rng.spacelike(4);
      if (parallel(e, ep)) ep = -e;
      if (!dir_later(e, ep)) continue;
      ++trials;
      const ExactVector u = direction_separator(e, ep);
      check_valid(u, e, ep);
      const int g = gram2(e, ep).sign();
      sep_count[g > 0 ? 0 : (g < 0 ? 1 : 2)]++;
      if (parallel(e, ep)) sep_count[3]++;
    }
    CHECK(sep_count[0] > 0);
    CHECK(sep_count[1] > 0);
  }
  SUBCASE("precondition violations") {
    CHECK_THROWS_AS(direction_separator(V({0, 1, 0, 0}), V({0, 2, 0, 0})),
                    PreconditionViolated);
    CHECK_THROWS_AS(direction_separator(V({1, 0, 0, 0}), V({0, 1, 0, 0})),
                    PreconditionViolated);
  }
}

TEST_CASE("direction cones and tail cuts") {
  const ExactVector e = V({0, 0, 1, 0});
  const DirectionCone cone = make_direction_cone(e, 0);
  CHECK(direction_in_cone_interior(e, cone));
  CHECK(is_spacelike(cone.tip_past));
  CHECK(is_spacelike(cone.tip_future));
  CHECK(causal_class(cone.tip_future - cone.tip_past) == CausalClass::TimelikeFuture);

  SUBCASE("radial string accepted at s = 1") {
    const StringGeom s(ExactVector::zero(4), e);
    CHECK(tail_cut(s, cone) == Q(1));
  }
  SUBCASE("offset string: verified membership of 100 tail samples") {
    const StringGeom s(V({0, 1, 0, 0}), e);
    const Rational cut = tail_cut(s, cone);
    CHECK(tail_in_cone(s, cut, cone));
    for (int k = 0; k < 100; ++k) {
      const Rational t = cut + Rational(k * 7, 3);
      CHECK(point_in_open_cone(s.at(t), cone));
    }
  }
  SUBCASE("enlarging the cone never increases the cut") {
    const StringGeom s(V({0, 1, 0, 0}), e);
    const DirectionCone tight = make_direction_cone(e, 4);
    const Rational loose_cut = tail_cut(s, cone);
    const Rational tight_cut = tail_cut(s, tight);
    CHECK(loose_cut <= tight_cut);
  }
  SUBCASE("direction outside the cone is rejected") {
    const DirectionCone tight = make_direction_cone(e, 6);
    CHECK_THROWS_AS(tail_cut(StringGeom(ExactVector::zero(4), V({0, 1, 0, 0})), tight),
                    DirectionNotInCone);
  }
}

TEST_CASE("chop_n certifies the Fig.1 cyclic triple") {
  const auto config = fig1_cyclic();
  const auto [chopping, table] = chop_n(config);
  const VerifyReport report = verify_chopping(config, chopping, table);
  CHECK(report.pass);
  CHECK(report.structural_errors.empty());
  // The whole strings have no latest member, so at least one string got cut.
  size_t total_cuts = 0;
  for (const auto& c : chopping.cuts) total_cuts += c.size();
  CHECK(total_cuts > 0);
}

TEST_CASE("chop_n: spacelike separated strings stay in one piece") {
  const std::vector<StringGeom> config = {
      StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})),
      StringGeom(V({0, 0, 3, 0}), V({0, 1, 0, 0})),
      StringGeom(V({0, 0, 6, 0}), V({0, 1, 0, 0}))};
  const auto [chopping, table] = chop_n(config);
  for (const auto& c : chopping.cuts) CHECK(c.empty());
  REQUIRE(table.entries.size() == 1);
  CHECK(table.entries[0].second == 0);  // smallest index recorded
  CHECK(verify_chopping(config, chopping, table).pass);
}

TEST_CASE("chop_n on two strings is consistent with chop_two") {
  const std::vector<StringGeom> config = {incomparable_s(), incomparable_sp()};
  const auto [chopping, table] = chop_n(config);
  CHECK(verify_chopping(config, chopping, table).pass);
  const TwoChopResult two = chop_two(config[0], config[1]);
  REQUIRE(two.needs_cut());
  // Every certified tuple relation must be compatible with the two-chop
  // relations under refinement: just re-verify the table independently.
  for (const auto& [tuple, index] : table.entries) {
    for (size_t j = 0; j < config.size(); ++j) {
      if (static_cast<int>(j) == index) continue;
      CHECK(later_region(chopping.piece(config, index, tuple[static_cast<size_t>(index)]),
                         chopping.piece(config, static_cast<int>(j),
                                        tuple[static_cast<size_t>(j)])));
    }
  }
}

TEST_CASE("chop_n rejects diagonal configurations") {
  const std::vector<StringGeom> config = {
      StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})),
      StringGeom(V({0, 2, 0, 0}), V({0, 0, 1, 0}))};
  CHECK_THROWS_AS(chop_n(config), OnDiagonal);
}

TEST_CASE("verify_chopping flags corruption") {
  const auto config = fig1_cyclic();
  auto [chopping, table] = chop_n(config);
  REQUIRE(verify_chopping(config, chopping, table).pass);

  SUBCASE("altered index on an asymmetric tuple") {
    bool flipped = false;
    for (auto& [tuple, index] : table.entries) {
      for (int cand = 0; cand < static_cast<int>(config.size()); ++cand) {
        if (cand == index) continue;
        bool later_all = true;
        for (size_t j = 0; j < config.size(); ++j) {
          if (static_cast<int>(j) == cand) continue;
          if (!later_region(chopping.piece(config, cand, tuple[static_cast<size_t>(cand)]),
                            chopping.piece(config, static_cast<int>(j),
                                           tuple[static_cast<size_t>(j)]))) {
            later_all = false;
            break;
          }
        }
        if (!later_all) {
          index = cand;
          flipped = true;
          break;
        }
      }
      if (flipped) break;
    }
    REQUIRE(flipped);
    const VerifyReport report = verify_chopping(config, chopping, table);
    CHECK_FALSE(report.pass);
  }

  SUBCASE("empty table reports MissingTuple") {
    const VerifyReport report = verify_chopping(config, chopping, LatestTable{});
    CHECK_FALSE(report.pass);
    bool missing = false;
    for (const auto& e : report.structural_errors)
      if (e.find("MissingTuple") != std::string::npos) missing = true;
    CHECK(missing);
  }
}

TEST_CASE("chop_n determinism") {
  const auto config = fig1_cyclic();
  const auto [c1, t1] = chop_n(config);
  const auto [c2, t2] = chop_n(config);
  CHECK(c1.cuts == c2.cuts);
  REQUIRE(t1.entries.size() == t2.entries.size());
  for (size_t k = 0; k < t1.entries.size(); ++k) {
    CHECK(t1.entries[k].first == t2.entries[k].first);
    CHECK(t1.entries[k].second == t2.entries[k].second);
  }
}

TEST_CASE("parallel equal-direction tails order by their offsets") {
  // Same direction, bases offset in time: the higher base is strictly later.
  const StringGeom lower(V({0, 0, 0, 0}), V({0, 1, 0, 0}));
  const StringGeom upper(V({2, 0, 1, 0}), V({0, 1, 0, 0}));
  const Region rl = Region::whole(lower);
  const Region ru = Region::whole(upper);
  CHECK(compare(ru, rl) == CompareResult::FirstLater);
  const std::vector<StringGeom> config = {lower, upper};
  const auto [chopping, table] = chop_n(config);
  CHECK(verify_chopping(config, chopping, table).pass);
}
