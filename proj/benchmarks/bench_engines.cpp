#include <benchmark/benchmark.h>

#include "hopfseq/builtins.hpp"
#include "hopfseq/center.hpp"
#include "hopfseq/cocenter.hpp"

using namespace hopfseq;

static void BM_verify_axioms_sl2(benchmark::State& state) {
  HopfPtr u = builtin("small-quantum-sl2:p=3");
  for (auto _ : state) {
    AxiomReport rep = verify_axioms(*u);
    benchmark::DoNotOptimize(rep.pass());
  }
}
BENCHMARK(BM_verify_axioms_sl2);

static void BM_hopf_center_q8(benchmark::State& state) {
  HopfPtr h = builtin("group-algebra:Q8");
  for (auto _ : state) {
    Subspace hz = hopf_center(h);
    benchmark::DoNotOptimize(hz.dim());
  }
}
BENCHMARK(BM_hopf_center_q8);

static void BM_hopf_center_sl2(benchmark::State& state) {
  HopfPtr u = builtin("small-quantum-sl2:p=3");
  for (auto _ : state) {
    Subspace hz = hopf_center(u);
    benchmark::DoNotOptimize(hz.dim());
  }
}
BENCHMARK(BM_hopf_center_sl2);

static void BM_adjoint_coaction_sl2(benchmark::State& state) {
  HopfPtr u = builtin("small-quantum-sl2:p=3");
  for (auto _ : state) {
    AdCoaction ad = adjoint_coaction(u);
    benchmark::DoNotOptimize(ad.matrix.rows());
  }
}
BENCHMARK(BM_adjoint_coaction_sl2);

static void BM_central_sequence_q8(benchmark::State& state) {
  HopfPtr h = builtin("group-algebra:Q8");
  for (auto _ : state) {
    CentralReport rep = central_sequence(h);
    benchmark::DoNotOptimize(rep.exactness.all_pass());
  }
}
BENCHMARK(BM_central_sequence_q8);

BENCHMARK_MAIN();
