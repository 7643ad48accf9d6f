#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "rsklip/constructions.hpp"
#include "rsklip/greene.hpp"
#include "rsklip/metrics.hpp"
#include "rsklip/rng.hpp"
#include "rsklip/search.hpp"
#include "rsklip/tableaux.hpp"

using namespace rsklip;

namespace {

std::vector<Permutation> make_pool(int n, std::size_t count,
                                   std::uint64_t stream) {
  SplitRng rng(0xBE7Cu, stream);
  std::vector<Permutation> pool;
  pool.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pool.push_back(random_permutation(n, rng));
  return pool;
}

void bm_rsk_binary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pool = make_pool(n, 32, 1);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(rsk(pool[i++ & 31], InsertScan::binary));
  state.SetItemsProcessed(state.iterations() * n);
}

void bm_rsk_linear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pool = make_pool(n, 32, 1);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(rsk(pool[i++ & 31], InsertScan::linear));
  state.SetItemsProcessed(state.iterations() * n);
}

void bm_inverse_rsk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pool = make_pool(n, 32, 2);
  std::vector<TableauPair> pairs;
  for (const auto& pi : pool) pairs.push_back(rsk(pi));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(inverse_rsk(pairs[i++ & 31]));
  state.SetItemsProcessed(state.iterations() * n);
}

void bm_greene_profile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pool = make_pool(n, 16, 3);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(greene_profile(pool[i++ & 15]));
}

void bm_adjacent_distance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pool = make_pool(n, 32, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t j = i++ & 31;
    benchmark::DoNotOptimize(
        adjacent_distance(pool[j], pool[(j + 1) & 31], Side::left));
  }
}

void bm_shape_distance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pool = make_pool(n, 32, 5);
  std::vector<Partition> shapes;
  for (const auto& pi : pool) shapes.push_back(shape_of(pi));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t j = i++ & 31;
    benchmark::DoNotOptimize(delta(shapes[j], shapes[(j + 1) & 31]));
  }
}

void bm_construct_t1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_t1(n));
}

void bm_walk_sweep(benchmark::State& state) {
  SweepParams params;
  params.n = 30;
  params.t = 5;
  params.trials = static_cast<int>(state.range(0));
  params.side = Side::left;
  params.seed = 99;
  params.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(random_walk_sweep(params));
  state.SetItemsProcessed(state.iterations() * params.trials);
}

void bm_canonicalize_pair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pool = make_pool(n, 32, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t j = i++ & 31;
    benchmark::DoNotOptimize(canonicalize_pair(pool[j], pool[(j + 1) & 31]));
  }
}

BENCHMARK(bm_rsk_binary)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(bm_rsk_linear)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bm_inverse_rsk)->Arg(64)->Arg(256);
BENCHMARK(bm_greene_profile)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_adjacent_distance)->Arg(64)->Arg(1024);
BENCHMARK(bm_shape_distance)->Arg(256)->Arg(4096);
BENCHMARK(bm_construct_t1)->Arg(100)->Arg(10000);
BENCHMARK(bm_walk_sweep)->Arg(50);
BENCHMARK(bm_canonicalize_pair)->Arg(32)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
