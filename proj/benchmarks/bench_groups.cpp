#include <benchmark/benchmark.h>

#include "semicount/groups.hpp"

using namespace semicount;

static void BM_MultiplySmall(benchmark::State& state) {
  GroupElement g = GroupElement::sl2(1, 1, 1, 2), h = GroupElement::sl2(5, 12, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(g * h);
}
BENCHMARK(BM_MultiplySmall);

static void BM_FloatMobius(benchmark::State& state) {
  FloatMobius m(GroupElement::sl2(1, 1, 1, 2));
  FloatMobius::Point x{0.3, 0, 0, 0}, y{};
  double d = 0;
  for (auto _ : state) {
    m.apply_with_derivative(x, y, d);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_FloatMobius);

