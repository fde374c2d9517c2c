// Microbenchmarks for the expensive enumeration paths: spectrum and
// topology construction, normal subgroup closure, brace ideal machinery,
// and the chain-condition battery.

#include <benchmark/benchmark.h>

#include "mlat/brace.hpp"
#include "mlat/catalog.hpp"
#include "mlat/group.hpp"
#include "mlat/series.hpp"
#include "mlat/spectrum.hpp"

using namespace mlat;

static void BM_zariski_bool3(benchmark::State& state) {
  const MultLattice m = boolean_lattice(3, /*meet_mult=*/true);
  for (auto _ : state) benchmark::DoNotOptimize(zariski(m));
}
BENCHMARK(BM_zariski_bool3);

static void BM_classify_elements_d4(benchmark::State& state) {
  const MultLattice m = catalog_lattice("ngrp-d4");
  for (auto _ : state) benchmark::DoNotOptimize(classify_elements(m));
}
BENCHMARK(BM_classify_elements_d4);

static void BM_normal_subgroups_s4(benchmark::State& state) {
  const FinGroup g = catalog_group("s4");
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(g));
}
BENCHMARK(BM_normal_subgroups_s4);

static void BM_normal_lattice_a5(benchmark::State& state) {
  const FinGroup g = catalog_group("a5");
  for (auto _ : state)
    benchmark::DoNotOptimize(normal_mult_lattice(g, GroupMult::commutator));
}
BENCHMARK(BM_normal_lattice_a5);

static void BM_brace_ideals_q8(benchmark::State& state) {
  const SkewBrace a = catalog_brace("triv-q8");
  for (auto _ : state) benchmark::DoNotOptimize(brace_lattice(a));
}
BENCHMARK(BM_brace_ideals_q8);

static void BM_ybe_q8(benchmark::State& state) {
  const SkewBrace a = catalog_brace("triv-q8");
  for (auto _ : state) benchmark::DoNotOptimize(ybe_solution(a));
}
BENCHMARK(BM_ybe_q8);

static void BM_hyperabelian_s4(benchmark::State& state) {
  const MultLattice m = catalog_lattice("ngrp-s4");
  for (auto _ : state) benchmark::DoNotOptimize(hyperabelian_report(m));
}
BENCHMARK(BM_hyperabelian_s4);

BENCHMARK_MAIN();
