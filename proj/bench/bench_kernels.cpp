// Serial reference vs OpenMP kernels on exact rational data.

#include <benchmark/benchmark.h>

#include <random>

#include "cyclerep/generator.hpp"
#include "cyclerep/linalg.hpp"
#include "cyclerep/regularize.hpp"

using namespace cyclerep;
using Q = Rational;

namespace {

Matrix<Q> random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<Q> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_small<Q>(rng, -9, 9);
  return m;
}

Cycle<Q> bench_cycle(std::size_t t, std::size_t chains_per_vertex) {
  GeneratorSpec<Q> spec;
  spec.t = t;
  for (std::size_t v = 1; v <= t; ++v) spec.chains.push_back({v, 2 * v + 1, chains_per_vertex});
  std::mt19937_64 rng(1);
  spec.regular_product = random_invertible<Q>(4, rng);
  return random_cycle(spec, 2).cycle;
}

void BM_matmul_serial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(matmul_serial(a, b));
}

void BM_matmul_parallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(matmul(a, b));
}

void BM_rref_serial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto a = random_matrix(n, n + 4, 3);
  for (auto _ : st) benchmark::DoNotOptimize(rref_serial(a));
}

void BM_rref_parallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto a = random_matrix(n, n + 4, 3);
  for (auto _ : st) benchmark::DoNotOptimize(rref(a));
}

void BM_table_serial(benchmark::State& st) {
  const auto c = bench_cycle(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernel_dim_table_serial(c));
}

void BM_table_parallel(benchmark::State& st) {
  const auto c = bench_cycle(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernel_dim_table(c));
}

}  // namespace

BENCHMARK(BM_matmul_serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_parallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
