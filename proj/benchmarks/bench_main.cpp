#include <benchmark/benchmark.h>

#include "hrf/hrform.hpp"
#include "hrf/oracle.hpp"
#include "hrf/padic.hpp"
#include "hrf/paths.hpp"

using namespace hrf;

// sl2 Gram entry (n, l) with an empty memo each time.
static void BM_Sl2Gram(benchmark::State& state) {
  const long n = state.range(0);
  const SimpleRootPath a{std::vector<std::size_t>(static_cast<std::size_t>(n), 0)};
  for (auto _ : state) {
    PathGram g(RootSystem::A1(), Weight{n});
    benchmark::DoNotOptimize(g.entry(a, a));
  }
}
BENCHMARK(BM_Sl2Gram)->Arg(4)->Arg(8)->Arg(12);

static void BM_GramBlockA2Zero(benchmark::State& state) {
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gram_block(RootSystem::A2(), Weight{k, k}, Weight{0, 0}));
}
BENCHMARK(BM_GramBlockA2Zero)->Arg(1)->Arg(2)->Arg(3);

static void BM_StandardModule(benchmark::State& state) {
  const RootSystem rs = state.range(0) == 0 ? RootSystem::A2() : RootSystem::B2();
  for (auto _ : state) benchmark::DoNotOptimize(standard_module(rs, Ring::rationals(), Weight{1, 1}));
}
BENCHMARK(BM_StandardModule)->Arg(0)->Arg(1);

static void BM_Decompose(benchmark::State& state) {
  auto v = standard_module(RootSystem::A2(), Ring::rationals(), Weight{state.range(0), 1});
  for (auto _ : state) benchmark::DoNotOptimize(decompose(v.module, v.form));
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2);

static void BM_VerifyHR(benchmark::State& state) {
  auto v = standard_module(RootSystem::B2(), Ring::rationals(), Weight{1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(verify_hr(v.module, v.form));
}
BENCHMARK(BM_VerifyHR);

static void BM_VerifyTiltingWeyl(benchmark::State& state) {
  auto [m, form] = weyl_lattice(RootSystem::A1(), Weight{state.range(0)}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tilting(m, form));
}
BENCHMARK(BM_VerifyTiltingWeyl)->Arg(3)->Arg(4);

static void BM_Freudenthal(benchmark::State& state) {
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::freudenthal_character(RootSystem::B2(), Weight{k, k}));
}
BENCHMARK(BM_Freudenthal)->Arg(1)->Arg(3);
BENCHMARK_MAIN();
