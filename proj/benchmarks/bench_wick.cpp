#include <benchmark/benchmark.h>

#include "causalchop/wick.hpp"

using namespace causalchop;

namespace {

ExactVector V(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return ExactVector(std::move(c));
}

void BM_enumerate_graphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n));
}
BENCHMARK(BM_enumerate_graphs)->Arg(4)->Arg(6)->Arg(8);

void BM_t_recursive_incomparable(benchmark::State& state) {
  const std::vector<StringGeom> config = {
      StringGeom(V({2, 0, 0, 1}), V({-3, 0, 5, 0})),
      StringGeom(V({0, 0, 0, 0}), V({0, 0, 1, 0}))};
  for (auto _ : state) benchmark::DoNotOptimize(t_product_recursive(config));
}
BENCHMARK(BM_t_recursive_incomparable);

}  // namespace
