#include <benchmark/benchmark.h>

#include "causalchop/chop.hpp"

using namespace causalchop;

namespace {

ExactVector V(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return ExactVector(std::move(c));
}

void BM_chop_two_incomparable(benchmark::State& state) {
  const StringGeom s(V({2, 0, 0, 1}), V({-3, 0, 5, 0}));
  const StringGeom sp(V({0, 0, 0, 0}), V({0, 0, 1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(chop_two(s, sp));
}
BENCHMARK(BM_chop_two_incomparable);

void BM_chop_n_cyclic3(benchmark::State& state) {
  const std::vector<StringGeom> config = {StringGeom(V({0, 0, 0}), V({1, 4, 0})),
                                          StringGeom(V({0, 4, 0}), V({1, -2, 3})),
                                          StringGeom(V({0, 2, 3}), V({1, -2, -3}))};
  for (auto _ : state) benchmark::DoNotOptimize(chop_n(config));
}
BENCHMARK(BM_chop_n_cyclic3);

void BM_direction_separator(benchmark::State& state) {
  const ExactVector e = V({0, 1, 0, 0});
  const ExactVector ep = V({0, 0, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(direction_separator(e, ep));
}
BENCHMARK(BM_direction_separator);

}  // namespace
