#include <benchmark/benchmark.h>

#include "qpluck/qcalc.hpp"
#include "qpluck/realize.hpp"
#include "qpluck/tree.hpp"

using namespace qpluck;

namespace {

void BM_PolyMul(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Poly g = gauss(m, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g * g);
  }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(12);

void BM_LatticeEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice_gf(4, n));
  }
}
BENCHMARK(BM_LatticeEnumeration)->Arg(6)->Arg(10)->Arg(14);

void BM_PluckProduct(benchmark::State& state) {
  // staggered caterpillar, a dense worst case for the vertex weights
  std::vector<int> indices;
  for (int a = 2; indices.size() < static_cast<size_t>(state.range(0)); a += 2)
    indices.push_back(a);
  const PlaneTree t = realize_qints(indices);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pluck_product(t));
  }
}
BENCHMARK(BM_PluckProduct)->Arg(3)->Arg(5)->Arg(7);

void BM_EnumerateTrees(benchmark::State& state) {
  const int edges = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    for_each_rooted_tree(edges, [&count](const PlaneTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(8)->Arg(10)->Arg(12);

void BM_RealizationSearch(benchmark::State& state) {
  const Poly target = q_int(4) * q_int(5) * q_int(7) * q_int(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_realizations(target, 8));
  }
}
BENCHMARK(BM_RealizationSearch);

}  // namespace

BENCHMARK_MAIN();
