#include <benchmark/benchmark.h>

#include "qf/gl2.hpp"

namespace {

void BM_ConjugatorSpace(benchmark::State& state) {
  qf::Rng rng(qf::kDefaultSeed);
  qf::Mat2 a = qf::sample_invertible(rng);
  qf::Mat2 b = qf::conj_op(a, qf::sample_invertible(rng), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::conjugator_space(a, b).dim);
  }
}
BENCHMARK(BM_ConjugatorSpace);

void BM_WitnessInClass(benchmark::State& state) {
  qf::ClassLabel cls = qf::ClassLabel::diag_pair(2.0, 3.0);
  qf::Rng rng(qf::kDefaultSeed);
  qf::Mat2 target = qf::sample_in_class(cls, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::witness_in_class(cls.base_point(), target, cls).is_witness());
  }
}
BENCHMARK(BM_WitnessInClass);

void BM_TwoStepPath(benchmark::State& state) {
  qf::ClassLabel cls = qf::ClassLabel::diag_pair(2.0, 3.0);
  qf::Mat2 swapped = qf::Mat2::diag(3.0, 2.0);  // the genuinely two-step target
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::two_step_path(cls, swapped).matrices.size());
  }
}
BENCHMARK(BM_TwoStepPath);

void BM_R3Probe(benchmark::State& state) {
  qf::ClassLabel cls = qf::ClassLabel::diag_pair(1.0, -1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::r3_probe(cls).residual);
  }
}
BENCHMARK(BM_R3Probe);

void BM_NthRoot(benchmark::State& state) {
  qf::Rng rng(qf::kDefaultSeed + 1);
  qf::Mat2 p = qf::sample_invertible(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::nth_root_matrix(p, 4).det());
  }
}
BENCHMARK(BM_NthRoot);

}  // namespace

BENCHMARK_MAIN();
