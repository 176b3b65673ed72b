#include "lenshom/diagram.hpp"
#include "lenshom/engine.hpp"
#include "lenshom/metrics.hpp"
#include "lenshom/trivial.hpp"

#include <benchmark/benchmark.h>

using namespace lenshom;

namespace {

GridDiagram family_ln(int n) {
  const int N = n + 2;
  const int pn = 5 * N;
  std::vector<Cell> os, xs;
  for (int i = 0; i < N; ++i) xs.push_back({pn - N + i, N - 1 - i});
  os.push_back({N - 2, N - 1});
  os.push_back({N - 1, N - 2});
  for (int i = 2; i < N; ++i) os.push_back({pn - N + i - 2, N - 1 - i});
  return GridDiagram(5, 1, N, std::move(os), std::move(xs));
}

}  // namespace

static void BM_scr(benchmark::State& state) {
  GridDiagram d = family_ln(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scr(d));
}
BENCHMARK(BM_scr)->Arg(1)->Arg(4);

static void BM_lift(benchmark::State& state) {
  GridDiagram d = family_ln(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lift(d));
}
BENCHMARK(BM_lift)->Arg(1)->Arg(4);

static void BM_canonical_key(benchmark::State& state) {
  GridDiagram d = family_ln(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(d));
}
BENCHMARK(BM_canonical_key)->Arg(1)->Arg(4);

static void BM_evaluate_family(benchmark::State& state) {
  GridDiagram d = family_ln(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Evaluator ev;
    benchmark::DoNotOptimize(ev.evaluate(d).value);
  }
}
BENCHMARK(BM_evaluate_family)->Arg(1)->Arg(3);

static void BM_build_trivial(benchmark::State& state) {
  IndexSet idx{5, 2, {0, 1, 2, 0, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(build_trivial_diagram(idx));
}
BENCHMARK(BM_build_trivial);

BENCHMARK_MAIN();
