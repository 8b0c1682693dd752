// Serial vs OpenMP evaluation of the segment solver on a bore grid.

#include <benchmark/benchmark.h>

#include "hafield/field_kernels.hpp"
#include "hafield/real_coil.hpp"
#include "hafield/scenario.hpp"

namespace {

using namespace hafield;

struct Setup {
  std::vector<SegmentCurrent> segments;
  std::vector<Vec3> points;
  double h;
};

const Setup& setup() {
  static const Setup s = [] {
    CoilWindingSpec w = *reference_scenario().winding();
    w.current = 1.0;
    return Setup{build_winding(w, 8), grid_points(centered_cube(0.5 * w.inner_radius), {4, 4, 4}),
                 1e-4 * w.inner_radius};
  }();
  return s;
}

void BM_CoilASerial(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::coil_a_serial(s.segments, s.points));
  state.SetItemsProcessed(state.iterations() * s.points.size() * s.segments.size());
}

void BM_CoilAParallel(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::coil_a_parallel(s.segments, s.points));
  state.SetItemsProcessed(state.iterations() * s.points.size() * s.segments.size());
}

void BM_CoilBSerial(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::coil_b_serial(s.segments, s.points, s.h));
}

void BM_CoilBParallel(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::coil_b_parallel(s.segments, s.points, s.h));
}

BENCHMARK(BM_CoilASerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoilAParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CoilBSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoilBParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
