#include <benchmark/benchmark.h>

#include <random>

#include "liecoh/betti.hpp"
#include "liecoh/catalog.hpp"
#include "liecoh/ce.hpp"
#include "liecoh/koszul.hpp"
#include "liecoh/linalg.hpp"

using namespace liecoh;

namespace {

Matrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(-9, 9);
  std::bernoulli_distribution keep(density);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng)) m(r, c) = Rational(value(rng), 1 + static_cast<int>(rng() % 5));
  return m;
}

void BM_RankBareiss(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankBareiss)->Arg(16)->Arg(32)->Arg(64);

void BM_RankSparse(benchmark::State& state) {
  const SparseMatrix m(random_matrix(static_cast<std::size_t>(state.range(0)), 0.1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankSparse)->Arg(32)->Arg(64)->Arg(128);

void BM_RankModular(benchmark::State& state) {
  const SparseMatrix m(random_matrix(static_cast<std::size_t>(state.range(0)), 0.1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, 2147483647ULL));
}
BENCHMARK(BM_RankModular)->Arg(32)->Arg(64)->Arg(128);

void BM_Formula(benchmark::State& state, const char* entry) {
  const HomogeneousPair p = catalog_build(entry);
  for (auto _ : state) benchmark::DoNotOptimize(betti_low(p));
}
BENCHMARK_CAPTURE(BM_Formula, flag_su3, "flag_su3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Formula, sphere_5, "sphere:5")->Unit(benchmark::kMillisecond);

void BM_Koszul(benchmark::State& state, const char* entry) {
  const HomogeneousPair p = catalog_build(entry);
  for (auto _ : state) benchmark::DoNotOptimize(betti_koszul(p));
}
BENCHMARK_CAPTURE(BM_Koszul, flag_su3, "flag_su3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Koszul, example_4_7, "example_4_7")->Unit(benchmark::kMillisecond);

void BM_Ce(benchmark::State& state, const char* entry) {
  const HomogeneousPair p = catalog_build(entry);
  for (auto _ : state) benchmark::DoNotOptimize(betti_ce(p));
}
BENCHMARK_CAPTURE(BM_Ce, flag_su3, "flag_su3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Ce, sphere_5, "sphere:5")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Ce, su_3, "su:3")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
