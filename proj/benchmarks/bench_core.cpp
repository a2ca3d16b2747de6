#include <benchmark/benchmark.h>

#include "fusedr/sampler.hpp"
#include "fusedr/verify.hpp"

using namespace fusedr;

namespace {

const QParams& q_half() {
  static const QParams q{ExactScalar(1, 2)};
  return q;
}

void BM_BaxterCoefficients(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int p = 0; p <= k; ++p) {
      benchmark::DoNotOptimize(baxter_coefficient(k, 6, p, ExactScalar(7, 3), q_half()));
    }
  }
}
BENCHMARK(BM_BaxterCoefficients)->Arg(2)->Arg(4)->Arg(6);

void BM_BaxterRecursive(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int p = 0; p <= k; ++p) {
      benchmark::DoNotOptimize(baxter_coefficient_recursive(k, 6, p, ExactScalar(7, 3), q_half()));
    }
  }
}
BENCHMARK(BM_BaxterRecursive)->Arg(2)->Arg(4)->Arg(6);

void BM_FusedProduct22(benchmark::State& state) {
  const BlockShape shape(2, 2, 2);
  const TensorSpace space(2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fused_r_product(shape, ExactScalar(8), space, q_half()));
  }
}
BENCHMARK(BM_FusedProduct22);

void BM_Reduce22(benchmark::State& state) {
  const BlockShape shape(2, 2, 2);
  const TensorSpace space(2, 4);
  const TensorOperator op = fused_r_product(shape, ExactScalar(8), space, q_half());
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_operator(op, shape, q_half()));
  }
}
BENCHMARK(BM_Reduce22);

void BM_ClosedForm22(benchmark::State& state) {
  const BlockShape shape(2, 2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_matrix(shape, ExactScalar(8), q_half()));
  }
}
BENCHMARK(BM_ClosedForm22);

void BM_SampleVertex(benchmark::State& state) {
  const WeightTable table = weight_table(BlockShape(1, 1, 2), q_half(), ExactScalar(2));
  SplitMix64 rng(42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_vertex(table, {0, 1}, rng));
  }
}
BENCHMARK(BM_SampleVertex);

void BM_SampleGrid20(benchmark::State& state) {
  const WeightTable table = weight_table(BlockShape(1, 1, 2), q_half(), ExactScalar(2));
  GridBoundary boundary;
  boundary.left.assign(20, 1);
  boundary.bottom.assign(20, 0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_grid(table, 20, 20, boundary, seed++));
  }
}
BENCHMARK(BM_SampleGrid20);

}  // namespace

BENCHMARK_MAIN();
