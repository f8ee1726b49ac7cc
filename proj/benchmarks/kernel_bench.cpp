#include <benchmark/benchmark.h>

#include <random>

#include "cesaro/hull.hpp"
#include "cesaro/iterate.hpp"
#include "cesaro/kernel.hpp"

namespace {

using namespace cesaro;

void BM_KernelTableFill(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    Kernel kernel(KernelBudget{k, n});
    benchmark::DoNotOptimize(kernel.row(k, n));
  }
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_KernelTableFill)->ArgsProduct({{2, 4}, {64, 128, 256, 512}})->Unit(benchmark::kMillisecond);

void BM_KernelCachedLookup(benchmark::State& state) {
  Kernel kernel;
  kernel.row(4, 512);
  std::size_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.entry(4, n, 1));
    n = n % 512 + 1;
  }
}
BENCHMARK(BM_KernelCachedLookup);

void BM_IterateRowUncached(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_row(3, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IterateRowUncached)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

std::vector<Point> random_prefix(std::size_t length) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(-50, 50);
  std::vector<Point> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(Point{Rational(num(rng))});
  return out;
}

void BM_ApplyIterate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Kernel kernel;
  const auto prefix = random_prefix(n);
  kernel.row(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_iterate(kernel, 3, prefix, n));
}
BENCHMARK(BM_ApplyIterate)->RangeMultiplier(4)->Range(16, 1024);

void BM_ApplyIterateOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto prefix = random_prefix(n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_iterate_oracle(3, prefix, n));
}
BENCHMARK(BM_ApplyIterateOracle)->RangeMultiplier(4)->Range(16, 1024);

void BM_TrackerPush(benchmark::State& state) {
  const auto prefix = random_prefix(4096);
  for (auto _ : state) {
    IterateTracker tracker(static_cast<unsigned>(state.range(0)), 1);
    tracker.push_all(prefix);
    benchmark::DoNotOptimize(tracker.value(1));
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_TrackerPush)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HullSimplex(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Space space(d);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-9, 9);
  FinitePointSet M;
  while (M.size() < 12) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(Rational(coord(rng)));
    M.insert(Point(std::move(c)));
  }
  const Point x(d);
  for (auto _ : state) benchmark::DoNotOptimize(hull_contains(space, M, x, Rational(0)));
}
BENCHMARK(BM_HullSimplex)->DenseRange(1, 4);

}  // namespace
BENCHMARK_MAIN();
