#include <benchmark/benchmark.h>

#include "braidshadow/config.hpp"
#include "braidshadow/nfi.hpp"
#include "braidshadow/shadow.hpp"

using namespace braidshadow;

namespace {

const NfiSubgroup& largest_degree6_object() {
  static const NfiSubgroup n = [] {
    const auto cat = catalog_search(6);
    return *std::max_element(cat.begin(), cat.end(), [](const auto& a, const auto& b) {
      return a.quotient().f2_commutator.order() < b.quotient().f2_commutator.order();
    });
  }();
  return n;
}

void BM_CatalogSerial(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalog_search_serial(degree));
}

void BM_CatalogParallel(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalog_search(degree));
}

void BM_ShadowsSerial(benchmark::State& state) {
  const auto& n = largest_degree6_object();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_shadows_serial(n));
}

void BM_ShadowsParallel(benchmark::State& state) {
  const auto& n = largest_degree6_object();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_shadows_parallel(n));
}

}  // namespace

BENCHMARK(BM_CatalogSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CatalogParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShadowsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShadowsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
