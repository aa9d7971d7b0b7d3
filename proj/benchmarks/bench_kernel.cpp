#include <benchmark/benchmark.h>

#include "hopfverify/bicross.hpp"
#include "hopfverify/models.hpp"

using namespace hopfverify;
using namespace hopfverify::models::np;

namespace {

std::shared_ptr<const models::ModelRegistry> registry(int k) {
  static std::map<int, std::shared_ptr<const models::ModelRegistry>> cache;
  auto& slot = cache[k];
  if (!slot) slot = models::ModelRegistry::build(k);
  return slot;
}

} // namespace

static void BM_BuildRegistry(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(models::ModelRegistry::build(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildRegistry)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

// Fresh algebra each round so the product cache does not hide the rewriting.
static void BM_NormalOrderTilde(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  const Algebra& T = registry(k)->tilde->algebra();
  for (auto _ : state) {
    Algebra A(T.alphabet(), T.table(), k);
    benchmark::DoNotOptimize(A.multiply({A.gen(F2), A.gen(F1), A.gen(K3), A.gen(Pm), A.gen(E1)}));
  }
}
BENCHMARK(BM_NormalOrderTilde)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  auto p = registry(static_cast<int>(state.range(0)))->tilde;
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(*p));
}
BENCHMARK(BM_Jacobi)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_HopfSuiteBicross(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    auto p = models::build_bicross(k);
    state.ResumeTiming();
    benchmark::DoNotOptimize(run_hopf_suite(*p));
  }
}
BENCHMARK(BM_HopfSuiteBicross)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  auto p = registry(k)->bicross;
  for (auto _ : state) {
    bicross::CrossedProduct cp(k);
    benchmark::DoNotOptimize(bicross::reconstruct(cp, *p));
  }
}
BENCHMARK(BM_Reconstruct)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_QYBE(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    auto p = models::build_bicross(k);
    state.ResumeTiming();
    benchmark::DoNotOptimize(models::check_qybe(*p));
  }
}
BENCHMARK(BM_QYBE)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_W2Centrality(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    auto p = models::build_bicross(k);
    state.ResumeTiming();
    benchmark::DoNotOptimize(models::check_centrality("W2", models::pl_square(p->algebra()), *p));
  }
}
BENCHMARK(BM_W2Centrality)->DenseRange(1, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_MutationSweep(benchmark::State& state) {
  auto m = registry(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(models::check_mutation_sweep(*m));
}
BENCHMARK(BM_MutationSweep)->Arg(2)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
