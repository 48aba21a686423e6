// Serial reference vs OpenMP kernel, same inputs, same exact results.

#include <benchmark/benchmark.h>

#include "pvclift/hierarchy/verifier.hpp"
#include "pvclift/instances/graph.hpp"
#include "pvclift/instances/pvc.hpp"
#include "pvclift/lasserre/lasserre.hpp"
#include "pvclift/linalg/psd.hpp"
#include "pvclift/moments/moment_vector.hpp"

using namespace pvclift;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

void BM_BruteForceCover(benchmark::State& state) {
  const auto g = instances::make_clique(18);
  for (auto _ : state) benchmark::DoNotOptimize(instances::brute_force_cover(g, 40, mode(state)));
  label(state);
}
BENCHMARK(BM_BruteForceCover)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifySa(benchmark::State& state) {
  const moments::DistParams params(instances::make_clique(10), linalg::make_rational(1, 28));
  hierarchy::VerifyOptions opts;
  opts.execution = mode(state);
  opts.integral_opt = linalg::Rational(1);
  for (auto _ : state) {
    const moments::MomentVector mv(params);  // fresh cache each run
    benchmark::DoNotOptimize(hierarchy::verify_sa(mv, 1, 1, opts));
  }
  label(state);
}
BENCHMARK(BM_VerifySa)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ZbarExhaustive(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lasserre::build_zbar_exhaustive(16, 1, linalg::make_rational(1, 7), mode(state)));
  }
  label(state);
}
BENCHMARK(BM_ZbarExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PsdCheck(benchmark::State& state) {
  const moments::MomentVector mv(moments::DistParams(instances::make_clique(12), linalg::make_rational(1, 28)));
  const auto m = moments::build_cond_matrix(mv, {}, {}, Execution::serial).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(linalg::psd_check(m, mode(state)));
  label(state);
}
BENCHMARK(BM_PsdCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
