#include <benchmark/benchmark.h>

#include <random>

#include "frieze/cluster.hpp"
#include "frieze/lattice.hpp"
#include "frieze/matrix.hpp"
#include "frieze/search.hpp"

using namespace frieze;

static void BM_Det(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = Scalar::rational(d(rng), 1 + (i + j) % 4);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(8)->Arg(16);

static void BM_PropagateFromCoeffs(benchmark::State& state) {
  std::vector<Scalar> a, b;
  for (long x : {6, 3, 1, 3, 4, 2, 1}) a.emplace_back(x);
  for (long x : {3, 14, 1, 2, 6, 5, 1}) b.emplace_back(x);
  for (auto _ : state) benchmark::DoNotOptimize(propagate_from_coeffs(a, b));
}
BENCHMARK(BM_PropagateFromCoeffs);

static void BM_Search(benchmark::State& state) {
  SearchConfig c;
  c.w = 2;
  c.bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(c));
}
BENCHMARK(BM_Search)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_LaurentMutation(benchmark::State& state) {
  ExchangeMatrix b = c2_square_aw(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Seed s = initial_seed(b);
    for (int k = 0; k < 6; ++k) s = mutate_seed(s, k % b.size());
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_LaurentMutation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
