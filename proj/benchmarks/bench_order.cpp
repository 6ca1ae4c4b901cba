#include <benchmark/benchmark.h>

#include "causalchop/order.hpp"

using namespace causalchop;

namespace {

ExactVector V(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return ExactVector(std::move(c));
}

void BM_later_point_ray(benchmark::State& state) {
  const Region p = Region::point(V({5, 0, 0, 0}));
  const Region ray = Region::whole(StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})));
  for (auto _ : state) benchmark::DoNotOptimize(later_region(p, ray));
}
BENCHMARK(BM_later_point_ray);

void BM_later_ray_ray_incomparable(benchmark::State& state) {
  const Region a = Region::whole(StringGeom(V({2, 0, 0, 1}), V({-3, 0, 5, 0})));
  const Region b = Region::whole(StringGeom(V({0, 0, 0, 0}), V({0, 0, 1, 0})));
  for (auto _ : state) benchmark::DoNotOptimize(decide_later(a, b));
}
BENCHMARK(BM_later_ray_ray_incomparable);

void BM_compare_tails(benchmark::State& state) {
  const Region a =
      Region::piece(Piece(StringGeom(V({0, 0, 0, 0}), V({0, 1, 0, 0})), Rational(4),
                          std::nullopt));
  const Region b =
      Region::piece(Piece(StringGeom(V({2, 0, 1, 0}), V({0, 1, 0, 0})), Rational(4),
                          std::nullopt));
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_compare_tails);

}  // namespace
