#include <benchmark/benchmark.h>

#include <sstream>

#include "penrose/bbw.hpp"
#include "penrose/character.hpp"
#include "penrose/cli.hpp"
#include "penrose/transform.hpp"

using namespace penrose;

namespace {

void BM_weyl_dim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // all-ones keeps the dimension near 2^(n(n+1)/2), inside checked range
  Weight w(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dim(n, w));
}
BENCHMARK(BM_weyl_dim)->Arg(3)->Arg(6)->Arg(9);

void BM_character(benchmark::State& state) {
  const Bundle b = make_bundle(space_M(3), {static_cast<Int>(state.range(0)), 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(character_of(b));
}
BENCHMARK(BM_character)->Arg(0)->Arg(2);

void BM_tensor_decompose(benchmark::State& state) {
  const BundleSum a = sum_of(make_bundle(space_M(3), {0, 2, 0}));
  const BundleSum b = sum_of(make_bundle(space_M(3), {-1, 1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(tensor(a, b));
}
BENCHMARK(BM_tensor_decompose);

void BM_cohomology(benchmark::State& state) {
  const Bundle b = make_bundle(space_F(3), {-2, 3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(b));
}
BENCHMARK(BM_cohomology);

void BM_transform_theta(benchmark::State& state) {
  const GradedInput in = graded_theta(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transform(in));
}
BENCHMARK(BM_transform_theta)->Arg(2)->Arg(3);

void BM_verify_corpus(benchmark::State& state) {
  for (auto _ : state) {
    std::ostringstream out, err;
    benchmark::DoNotOptimize(cli_main({"verify"}, out, err));
  }
}
BENCHMARK(BM_verify_corpus);

}  // namespace

BENCHMARK_MAIN();
