#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "assort/assort.hpp"

namespace {

// beta = 2 uniform distinct 64-bit words, regenerated once per size.
std::vector<std::uint64_t> workload(std::size_t n) {
  return assort::gen_uniform_distinct<std::uint64_t>(n, 2.0, assort::RangeUnit::key, 1234)
      .values;
}

void BM_readonly(benchmark::State& state) {
  const auto input = workload(std::size_t(state.range(0)));
  for (auto _ : state) {
    auto values = input;
    assort::sort_readonly(values);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_modifiable(benchmark::State& state) {
  const auto input =
      assort::gen_uniform_distinct<std::uint64_t>(std::size_t(state.range(0)), 2.0,
                                                  assort::RangeUnit::record, 1234)
          .values;
  for (auto _ : state) {
    auto values = input;
    assort::sort_sequential(values);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_counting(benchmark::State& state) {
  const auto input = workload(std::size_t(state.range(0)));
  for (auto _ : state) {
    auto sorted = assort::counting_sort<std::uint64_t>(input, 0,
                                                       std::uint64_t(2 * state.range(0)));
    benchmark::DoNotOptimize(sorted.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_radix(benchmark::State& state) {
  const auto input = workload(std::size_t(state.range(0)));
  for (auto _ : state) {
    auto sorted = assort::lsd_radix_sort<std::uint64_t>(input);
    benchmark::DoNotOptimize(sorted.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_std_sort(benchmark::State& state) {
  const auto input = workload(std::size_t(state.range(0)));
  for (auto _ : state) {
    auto sorted = assort::comparison_oracle_sort<std::uint64_t>(input);
    benchmark::DoNotOptimize(sorted.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_readonly)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_modifiable)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_counting)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_radix)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_std_sort)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
