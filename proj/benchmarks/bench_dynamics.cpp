#include <benchmark/benchmark.h>

#include "semicount/congruence.hpp"
#include "semicount/counting.hpp"
#include "semicount/dynamics.hpp"
#include "semicount/thermo.hpp"

using namespace semicount;

namespace {
const SemigroupSpec& cf12() {
  static const SemigroupSpec s = SemigroupSpec::continued_fractions({1, 2}, find_trim_epsilon({1, 2}));
  return s;
}
}  // namespace

static void BM_PeriodicPoint(benchmark::State& state) {
  Word w(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(i % 4);
  for (auto _ : state) benchmark::DoNotOptimize(periodic_point(w, cf12()));
}
BENCHMARK(BM_PeriodicPoint)->Arg(4)->Arg(16);

static void BM_BowenDelta(benchmark::State& state) {
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bowen_delta(cf12(), 1e-10, {depth, false, 200}).delta);
}
BENCHMARK(BM_BowenDelta)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_BallCount(benchmark::State& state) {
  BallCountOptions opt;
  opt.budget = 10'000'000;
  int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CountLedger led = ball_count(cf12(), q, {}, geometric_schedule(200.0, 8), opt);
    benchmark::DoNotOptimize(led.group_size);
  }
}
BENCHMARK(BM_BallCount)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CayleyGap(benchmark::State& state) {
  ReturnTrajectorySet s = return_trajectory_set(cf12(), 1, 0, 0);
  QuotientGroup g(s.elements, Modulus::integer(static_cast<int>(state.range(0))));
  std::vector<std::uint32_t> gens;
  for (const auto& h : s.elements) gens.push_back(g.index_of(h));
  for (auto _ : state) benchmark::DoNotOptimize(cayley_gap(g, gens).lambda2);
}
BENCHMARK(BM_CayleyGap)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ZarembaSets(benchmark::State& state) {
  std::vector<GaussianInteger> a = {1, 2, 3, 4, 5};
  for (auto _ : state) benchmark::DoNotOptimize(zaremba_sets(a, Integer(state.range(0))).denominators.size());
}
BENCHMARK(BM_ZarembaSets)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
