#include <benchmark/benchmark.h>

#include "qf/analysis.hpp"
#include "qf/quandle.hpp"

namespace {

qf::QuandleTable bench_table(int n) { return qf::build(qf::ConjQ{qf::SymmetricG{n}, 1}); }

// One left translation against all of them, on latin input where the full
// test cannot short-circuit. The single-translation test is what makes
// latin detection cheap.
void BM_LatinFast(benchmark::State& state) {
  qf::QuandleTable t = qf::build(qf::DihedralQ{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::is_latin(t, qf::LatinMode::Fast));
  }
}
BENCHMARK(BM_LatinFast)->Arg(51)->Arg(201);

void BM_LatinOracle(benchmark::State& state) {
  qf::QuandleTable t = qf::build(qf::DihedralQ{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::is_latin(t, qf::LatinMode::Oracle));
  }
}
BENCHMARK(BM_LatinOracle)->Arg(51)->Arg(201);

void BM_Validate(benchmark::State& state) {
  qf::QuandleTable t = bench_table(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::validate(t).ok());
  }
}
BENCHMARK(BM_Validate)->Arg(4)->Arg(5);

void BM_ConnectivityDegree(benchmark::State& state) {
  qf::QuandleTable t = qf::build(qf::DihedralQ{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::connectivity_degree(t).connected);
  }
}
BENCHMARK(BM_ConnectivityDegree)->Arg(9)->Arg(21);

void BM_Iterate(benchmark::State& state) {
  qf::QuandleTable t = bench_table(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::iterate(t, static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_Iterate)->Arg(2)->Arg(6);

void BM_TypeOf(benchmark::State& state) {
  qf::QuandleTable t = bench_table(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::type_of(t));
  }
}
BENCHMARK(BM_TypeOf);

void BM_IsomorphismSearch(benchmark::State& state) {
  qf::QuandleTable a = qf::build(qf::CoreQ{qf::DihedralG{6}});
  qf::QuandleTable b = qf::build(qf::CoreQ{qf::DihedralG{6}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qf::find_isomorphism(a, b).found());
  }
}
BENCHMARK(BM_IsomorphismSearch);

}  // namespace
