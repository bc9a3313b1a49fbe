#include <benchmark/benchmark.h>

#include <random>

#include "deltafn/brauer.hpp"
#include "deltafn/functors.hpp"

using namespace deltafn;

namespace {

Matrix random_matrix(int p, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<long long>(rng() % static_cast<unsigned>(p)));
  return m;
}

void BM_Rank(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Matrix m = random_matrix(p, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Args({2, 64})->Args({2, 256})->Args({3, 64})->Args({3, 256});

void BM_Multiply(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Matrix a = random_matrix(p, n, 1), b = random_matrix(p, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Args({2, 128})->Args({3, 128});

void BM_BuildGL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), p = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_gl(n, p));
}
BENCHMARK(BM_BuildGL)->Args({3, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_ChopRegular(benchmark::State& state) {
  auto G = build_gl(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Rep R = regular(G);
  for (auto _ : state) {
    Rng rng(1);
    SimpleRegistry reg(G);
    benchmark::DoNotOptimize(chop(R, reg, rng));
  }
}
BENCHMARK(BM_ChopRegular)->Args({3, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_Pims(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), p = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Catalog cat;
    benchmark::DoNotOptimize(cat.gl(n, p).pims().size());
  }
}
BENCHMARK(BM_Pims)->Args({3, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_Delta(benchmark::State& state) {
  Catalog cat;
  auto& ctx = cat.gl(3, 2);
  const Rep P = regular(ctx.table());
  ctx.lower().pims();
  for (auto _ : state) benchmark::DoNotOptimize(delta(P, ctx).output.dim());
}
BENCHMARK(BM_Delta)->Unit(benchmark::kMillisecond);

void BM_HStar(benchmark::State& state) {
  auto G = build_gl(3, 2);
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_hstar(G, D).dims());
}
BENCHMARK(BM_HStar)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SteenrodSquare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(steenrod_square(3, 4, 8));
}
BENCHMARK(BM_SteenrodSquare);

void BM_BrauerCharacter(benchmark::State& state) {
  auto G = build_gl(3, 2);
  const auto table = brauer_classes(*G);
  const Rep R = regular(G);
  for (auto _ : state) benchmark::DoNotOptimize(brauer_character(R, table));
}
BENCHMARK(BM_BrauerCharacter)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
