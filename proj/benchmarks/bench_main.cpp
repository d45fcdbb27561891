#include <benchmark/benchmark.h>

#include "biclosure/catalog.hpp"
#include "biclosure/dual_space.hpp"
#include "biclosure/representation.hpp"
#include "biclosure/theorem_suite.hpp"

using namespace biclosure;

// Up-set enumeration on antichains: 2^n points, the worst case per element.
static void BM_DualSpaceAntichain(benchmark::State& state) {
  const Poset P = named::antichain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_space(P).size());
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << state.range(0)));
}
BENCHMARK(BM_DualSpaceAntichain)->DenseRange(8, 16, 4);

static void BM_DualSpaceBoolean(benchmark::State& state) {
  const Poset P = named::boolean_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_space(P).size());
}
BENCHMARK(BM_DualSpaceBoolean)->DenseRange(2, 4);

static void BM_EnumeratePosets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(n, n).size());
}
BENCHMARK(BM_EnumeratePosets)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_SigmaCheck(benchmark::State& state) {
  const Poset P = named::boolean_lattice(static_cast<std::size_t>(state.range(0)));
  const Subspace A = dual_space(P);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_check(A).isomorphism);
}
BENCHMARK(BM_SigmaCheck)->DenseRange(1, 3);

static void BM_CollectionS(benchmark::State& state) {
  const Poset B4 = named::m_lattice(2);
  const Poset M4 = named::m_lattice(4);
  const Poset& P = state.range(0) == 0 ? B4 : M4;
  for (auto _ : state) benchmark::DoNotOptimize(collection_S(P, 18).size());
}
BENCHMARK(BM_CollectionS)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TheoremSuite(benchmark::State& state) {
  const Poset P = state.range(0) == 0 ? named::m_lattice(2) : named::free_distributive_2();
  for (auto _ : state) benchmark::DoNotOptimize(theorem_suite(P).all_pass());
}
BENCHMARK(BM_TheoremSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
