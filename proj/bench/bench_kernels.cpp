// Serial reference kernels against their OpenMP / FFT counterparts.

#include <benchmark/benchmark.h>

#include "sidon/chaos.hpp"
#include "sidon/kernel.hpp"
#include "sidon/polarize.hpp"
#include "sidon/random_poly.hpp"
#include "sidon/torus_kernels.hpp"

using namespace sidon;

namespace {

TrigPoly bench_trig(int n, int m) {
  CounterRng rng(1);
  return torus_restriction(random_hom_poly(n, m, rng, 64));
}

void grid_args(benchmark::internal::Benchmark* b) {
  b->Args({2, 6, 256})->Args({3, 8, 64})->Args({2, 8, 1024});
}

void BM_GridSerial(benchmark::State& state) {
  const TrigPoly f = bench_trig(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const std::vector<double> anchor(static_cast<std::size_t>(f.dims), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(grid_values_serial(f, static_cast<int>(state.range(2)), anchor));
}
BENCHMARK(BM_GridSerial)->Apply(grid_args)->Unit(benchmark::kMillisecond);

void BM_GridOmp(benchmark::State& state) {
  const TrigPoly f = bench_trig(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const std::vector<double> anchor(static_cast<std::size_t>(f.dims), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(grid_values_omp(f, static_cast<int>(state.range(2)), anchor));
}
BENCHMARK(BM_GridOmp)->Apply(grid_args)->Unit(benchmark::kMillisecond);

void BM_GridFft(benchmark::State& state) {
  const TrigPoly f = bench_trig(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const std::vector<double> anchor(static_cast<std::size_t>(f.dims), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(grid_values_fft(f, static_cast<int>(state.range(2)), anchor));
}
BENCHMARK(BM_GridFft)->Apply(grid_args)->Unit(benchmark::kMillisecond);

ChaosVector bench_chaos(int n) {
  CounterRng rng(2);
  return random_chaos(n, 3, rng, 64);
}

void BM_ChaosSerial(benchmark::State& state) {
  const ChaosVector x = bench_chaos(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chaos_abs_mean_serial(x));
}
BENCHMARK(BM_ChaosSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ChaosGrayOmp(benchmark::State& state) {
  const ChaosVector x = bench_chaos(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chaos_abs_mean(x));
}
BENCHMARK(BM_ChaosGrayOmp)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

struct ProjectionCase {
  HomPoly p;
  std::vector<Complex> z;
};

ProjectionCase projection_case() {
  CounterRng rng(3);
  HomPoly p = random_hom_poly(3, 4, rng);
  auto z = random_polydisc_point(3, rng);
  return {std::move(p), std::move(z)};
}

void BM_ProjectSerial(benchmark::State& state) {
  const auto c = projection_case();
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_tetra_mc_serial(c.p, c.z, static_cast<std::size_t>(state.range(0)), 7));
  }
}
BENCHMARK(BM_ProjectSerial)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ProjectOmp(benchmark::State& state) {
  const auto c = projection_case();
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_tetra_mc(c.p, c.z, static_cast<std::size_t>(state.range(0)), 7));
  }
}
BENCHMARK(BM_ProjectOmp)->Arg(100000)->Unit(benchmark::kMillisecond);

struct PolarCase {
  HomPoly p;
  std::vector<std::vector<Complex>> points;
};

PolarCase polar_case(int m) {
  CounterRng rng(4);
  HomPoly p = random_hom_poly(3, m, rng);
  std::vector<std::vector<Complex>> points;
  for (int i = 0; i < m; ++i) points.push_back(random_polydisc_point(3, rng));
  return {std::move(p), std::move(points)};
}

void BM_PolarizeSerial(benchmark::State& state) {
  const auto c = polar_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polarize_eval_serial(c.p, c.points));
}
BENCHMARK(BM_PolarizeSerial)->Arg(8)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_PolarizeOmp(benchmark::State& state) {
  const auto c = polar_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polarize_eval(c.p, c.points));
}
BENCHMARK(BM_PolarizeOmp)->Arg(8)->Arg(14)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
