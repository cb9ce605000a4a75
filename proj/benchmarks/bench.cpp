#include <benchmark/benchmark.h>

#include "sgx/classify.hpp"
#include "sgx/corpus.hpp"
#include "sgx/dual_pairs.hpp"
#include "sgx/rees.hpp"
#include "sgx/tensor.hpp"

using namespace sgx;

namespace {

  void enumerate(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_semigroups(n, Dedup::labeled, true));
    }
  }
  BENCHMARK(enumerate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void dedup(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_semigroups(3, Dedup::isomorphism));
    }
  }
  BENCHMARK(dedup)->Unit(benchmark::kMillisecond);

  void classify_corpus(benchmark::State& state) {
    auto const corpus = semigroups_up_to(3, Dedup::labeled);
    for (auto _ : state) {
      for (auto const& S : corpus) {
        benchmark::DoNotOptimize(classify(S));
      }
    }
  }
  BENCHMARK(classify_corpus)->Unit(benchmark::kMillisecond);

  void tensor_square_regular(benchmark::State& state) {
    auto const S = catalog::cyclic_group(static_cast<std::size_t>(state.range(0)));
    auto const A = RightAct::regular(S);
    auto const B = LeftAct::regular(S);
    for (auto _ : state) {
      benchmark::DoNotOptimize(tensor_product(A, B));
    }
  }
  BENCHMARK(tensor_square_regular)->RangeMultiplier(2)->Range(2, 32);

  void rees_cover(benchmark::State& state) {
    auto const M = rees_construct(catalog::right_zero(2), 2, 2, {0, 1, 1, 0});
    for (auto _ : state) {
      benchmark::DoNotOptimize(morita_cover(M));
    }
  }
  BENCHMARK(rees_cover);

  void adjoint_pairs(benchmark::State& state) {
    auto const beta = Pair::regular(catalog::cyclic_group(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
      benchmark::DoNotOptimize(omega(beta));
    }
  }
  BENCHMARK(adjoint_pairs)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
