#include <benchmark/benchmark.h>

#include "mockgauss/dirichlet.hpp"
#include "mockgauss/linstat.hpp"
#include "mockgauss/moments.hpp"
#include "mockgauss/partitions.hpp"
#include "mockgauss/rmt.hpp"
#include "mockgauss/zeros.hpp"

using namespace mockgauss;

static void BM_SampleCueQr(benchmark::State& state) {
  RandomStream rs(1, 0);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_cue(N, rs));
}
BENCHMARK(BM_SampleCueQr)->Arg(16)->Arg(64)->Arg(128);

static void BM_SampleCueTraces(benchmark::State& state) {
  RandomStream rs(1, 0);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_cue_traces(N, N, rs));
}
BENCHMARK(BM_SampleCueTraces)->Arg(16)->Arg(64)->Arg(128);

static void BM_McMoments(benchmark::State& state) {
  const auto f = TestFunction::triangle(1.0);
  McOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mc_moments(64, f, 2000, 1, 4, opts));
}
BENCHMARK(BM_McMoments)->Unit(benchmark::kMillisecond);

static void BM_ExactMoment(benchmark::State& state) {
  const auto f = TestFunction::triangle(2.0 / 3.0);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_moment(f, m, 1e-5));
}
BENCHMARK(BM_ExactMoment)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_LEvalCriticalLine(benchmark::State& state) {
  DirichletGroup g(101);
  const auto chi = g.character(3);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(l_eval(chi, cdouble(0.5, t)));
}
BENCHMARK(BM_LEvalCriticalLine)->Arg(10)->Arg(100);

static void BM_FindZeros(benchmark::State& state) {
  DirichletGroup g(101);
  const auto chi = g.character(7);
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros(chi, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_FindZeros)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_WfBar(benchmark::State& state) {
  const auto f = parse_test_function("conv(coswin:0.5,coswin:0.5)");
  for (auto _ : state) benchmark::DoNotOptimize(wf_bar(101, 1, f));
}
BENCHMARK(BM_WfBar)->Unit(benchmark::kMicrosecond);

static void BM_OscFamily(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto f = TestFunction::triangle(1.0);
  DirichletGroup g(q);
  for (auto _ : state) {
    const auto sums = residue_sums(q, f);
    benchmark::DoNotOptimize(wf_osc_family(g, sums));
  }
}
BENCHMARK(BM_OscFamily)->Arg(1009)->Arg(10007)->Arg(99991)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePartitions(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(m, m / 2));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
