#include <benchmark/benchmark.h>
#include <omp.h>

#include "szeta/density.hpp"
#include "szeta/kernels.hpp"
#include "szeta/quadrature.hpp"

using namespace szeta;

static void BM_Simplex(benchmark::State& state, bool parallel) {
  const auto p = DensityProfile::horgan_chan();
  const auto set = kernels::make_diagram_set(static_cast<int>(state.range(0)));
  kernels::SimplexProblem prob{BC::DD, &p, &set, 24};
  for (auto _ : state) {
    const double v = parallel ? kernels::simplex_integral_omp(prob) : kernels::simplex_integral_serial(prob);
    benchmark::DoNotOptimize(v);
  }
  state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
}
BENCHMARK_CAPTURE(BM_Simplex, serial, false)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Simplex, omp, true)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Kernel(benchmark::State& state, bool parallel) {
  const auto p = DensityProfile::oscillating(0.1);
  const auto c = quad::composite(-0.5, 0.5, static_cast<int>(state.range(0)), 4);
  const auto s = kernels::weighted_root_density_serial(p, c.x, c.w);
  Eigen::MatrixXd m;
  for (auto _ : state) {
    if (parallel)
      kernels::assemble_kernel_omp(BC::NN, 1.0, c.x, s, m);
    else
      kernels::assemble_kernel_serial(BC::NN, 1.0, c.x, s, m);
    benchmark::DoNotOptimize(m.data());
  }
}
BENCHMARK_CAPTURE(BM_Kernel, serial, false)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Kernel, omp, true)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
