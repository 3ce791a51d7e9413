#include <benchmark/benchmark.h>

#include "placefn/census.hpp"
#include "placefn/representation.hpp"

using namespace placefn;

namespace {

MultiSemigroup order3_pair() {
  // Meet and join of the chain 0 < 1 < 2.
  OpTable meet{0, 0, 0, 0, 1, 1, 0, 1, 2};
  OpTable join{0, 1, 2, 1, 1, 2, 2, 2, 2};
  return MultiSemigroup(make_carrier(3), {meet, join});
}

void BM_closure_order2(benchmark::State& state) {
  OpTable lzt{0, 0, 1, 1};
  MultiSemigroup alg(make_carrier(2), {lzt, lzt});
  for (auto _ : state) benchmark::DoNotOptimize(closure(alg));
}
BENCHMARK(BM_closure_order2);

void BM_closure_order3(benchmark::State& state) {
  MultiSemigroup alg = order3_pair();
  for (auto _ : state) benchmark::DoNotOptimize(closure(alg));
}
BENCHMARK(BM_closure_order3);

void BM_bruteforce_oracle_order2(benchmark::State& state) {
  OpTable xor2{0, 1, 1, 0};
  MultiSemigroup alg(make_carrier(2), {xor2, xor2});
  for (auto _ : state) benchmark::DoNotOptimize(bruteforce_violation(alg, state.range(0)));
}
BENCHMARK(BM_bruteforce_oracle_order2)->Arg(3)->Arg(4);

void BM_census_order2(benchmark::State& state) {
  CensusOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(census(2, 2, opts));
}
BENCHMARK(BM_census_order2);

void BM_census_order3(benchmark::State& state) {
  CensusOptions opts;
  opts.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(2, 3, opts));
}
BENCHMARK(BM_census_order3)->Arg(1)->Arg(0);

void BM_faithful_representation(benchmark::State& state) {
  MultiSemigroup alg = order3_pair();
  for (auto _ : state) benchmark::DoNotOptimize(faithful_representation(alg));
}
BENCHMARK(BM_faithful_representation);

void BM_unitary_extension(benchmark::State& state) {
  OpTable lzt{0, 0, 1, 1};
  MultiSemigroup alg(make_carrier(2), {lzt, lzt});
  Representation total = totalize(faithful_representation(alg));
  for (auto _ : state)
    benchmark::DoNotOptimize(unitary_extension(total.assignment(), 2, total.points(), 100000));
}
BENCHMARK(BM_unitary_extension);

}  // namespace

BENCHMARK_MAIN();
