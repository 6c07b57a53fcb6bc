#include <benchmark/benchmark.h>

#include <random>

#include "hopfseq/subspace.hpp"

using namespace hopfseq;

namespace {

Matrix random_matrix(const Field* f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of(f, d(rng));
  return m;
}

}  // namespace

static void BM_rref_rational(benchmark::State& state) {
  std::mt19937 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(Field::rationals(), n, n, rng);
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_rref_rational)->Arg(16)->Arg(32)->Arg(64);

static void BM_rref_cyclotomic(benchmark::State& state) {
  std::mt19937 rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(Field::cyclotomic(3), n, n, rng);
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_rref_cyclotomic)->Arg(16)->Arg(32);

static void BM_kernel_stacked(benchmark::State& state) {
  std::mt19937 rng(3);
  Matrix m = random_matrix(Field::prime(101), 128, 27, rng);
  for (auto _ : state) {
    Subspace k = kernel(m);
    benchmark::DoNotOptimize(k.dim());
  }
}
BENCHMARK(BM_kernel_stacked);

BENCHMARK_MAIN();
