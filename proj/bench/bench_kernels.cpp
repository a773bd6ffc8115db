#include <random>

#include <benchmark/benchmark.h>

#include "cubewall/action.hpp"
#include "cubewall/closedform.hpp"
#include "cubewall/engine.hpp"

using namespace cubewall;

namespace {

Polynomial random_poly(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> c(n);
  for (auto& x : c) x = BigInt(rng()) * BigInt(rng());
  return Polynomial(std::move(c));
}

void BM_MulSerial(benchmark::State& st) {
  const auto p = random_poly(static_cast<std::size_t>(st.range(0)), 1);
  const auto q = random_poly(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul_serial(p, q));
}
void BM_MulParallel(benchmark::State& st) {
  const auto p = random_poly(static_cast<std::size_t>(st.range(0)), 1);
  const auto q = random_poly(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(mul(p, q));
}
BENCHMARK(BM_MulSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ProductSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(poincare_product_serial(static_cast<int>(st.range(0))));
}
void BM_ProductParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(poincare_product(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ProductSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_GkmSerial(benchmark::State& st) {
  const auto a = build_sign_matrix(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gkm_report_serial(a));
}
void BM_GkmParallel(benchmark::State& st) {
  const auto a = build_sign_matrix(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gkm_report(a));
}
BENCHMARK(BM_GkmSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GkmParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_WalksSerial(benchmark::State& st) {
  const int r = static_cast<int>(st.range(0));
  const auto a = build_sign_matrix(r);
  const auto paths = random_paths(r, 200, 7);
  for (auto _ : st) benchmark::DoNotOptimize(walk_paths_serial(a, paths, poincare_invariant()));
}
void BM_WalksParallel(benchmark::State& st) {
  const int r = static_cast<int>(st.range(0));
  const auto a = build_sign_matrix(r);
  const auto paths = random_paths(r, 200, 7);
  for (auto _ : st) benchmark::DoNotOptimize(walk_paths(a, paths, poincare_invariant()));
}
BENCHMARK(BM_WalksSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WalksParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
