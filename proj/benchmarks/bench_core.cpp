#include <benchmark/benchmark.h>

#include "singerfac/bruteforce.hpp"
#include "singerfac/charcount.hpp"
#include "singerfac/combinat.hpp"
#include "singerfac/green.hpp"

using namespace singerfac;

static void BM_QBinomial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto poly = q_binomial(n, n / 2);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_QBinomial)->Arg(16)->Arg(32)->Arg(64);

static void BM_GreenColumn(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Partition lambda = Partition::hook(2, n - 2);
  for (auto _ : state) {
    GreenTable table;  // fresh table so the expansion is actually computed
    for (const auto& rho : partitions_of(n))
      benchmark::DoNotOptimize(table.green_polynomial(lambda, rho));
  }
}
BENCHMARK(BM_GreenColumn)->Arg(4)->Arg(6)->Arg(8);

static void BM_FieldBuild(benchmark::State& state) {
  for (auto _ : state) {
    auto field = Field::make(2, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(field);
  }
}
BENCHMARK(BM_FieldBuild)->Arg(8)->Arg(12)->Arg(16);

static void BM_GroupClosure(benchmark::State& state) {
  auto params = GroupParams::make(3, Sign::Unitary, 2, 3);  // 648 elements
  for (auto _ : state) {
    auto table = GroupTable::generate(params);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_GroupClosure);

static void BM_Convolution(benchmark::State& state) {
  static GroupTable table = GroupTable::generate(GroupParams::make(3, Sign::Linear, 2, 1));
  static SingerElement singer = table.find_singer();
  table.reflection_products();  // build the product table outside the loop
  int ell = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto count = fac_count(table, singer.matrix, ell);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Convolution)->Arg(3)->Arg(5)->Arg(7);

static void BM_CharacterPipeline(benchmark::State& state) {
  auto params = GroupParams::make(3, Sign::Unitary, 3, 4);
  int ell = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto count = frobenius_count(params, ell);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CharacterPipeline)->Arg(3)->Arg(6);

BENCHMARK_MAIN();
