#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "shortcut/evaluation.hpp"
#include "shortcut/fixtures.hpp"
#include "shortcut/pipeline.hpp"

using namespace shortcut;
namespace fx = shortcut::fixtures;

namespace {

Mask elephant_on_square(int side) {
  const Mask src = fx::elephant_mask(side / 256.0);
  Mask out(side, side);
  for (int r = 0; r < src.height() && r < side; ++r)
    for (int c = 0; c < src.width() && c < side; ++c) out.set(c, r, src.at(c, r));
  return out;
}

// Mask to parts, contour tracing included. Arg is the canvas side in pixels.
void BM_DecomposeMask(benchmark::State& state) {
  const Mask mask = elephant_on_square(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(mask, DecomposeConfig{}));
  state.counters["contour"] = static_cast<double>(trace_contour(mask).size());
}
BENCHMARK(BM_DecomposeMask)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_TraceContour(benchmark::State& state) {
  const Mask mask = elephant_on_square(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_contour(mask));
}
BENCHMARK(BM_TraceContour)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);

// Arg is the number of vertices of a noisy circle.
void BM_Dce(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Polygon p = fx::noisy_circle(rng, static_cast<std::size_t>(state.range(0)), 200, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dce::simplify(p, {0.5, 3}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dce)->RangeMultiplier(2)->Range(256, 4096)->Complexity()->Unit(benchmark::kMicrosecond);

// Arg is the number of arms of a star, so twice as many m- points.
void BM_Hypotheses(benchmark::State& state) {
  const auto arms = static_cast<std::size_t>(state.range(0));
  std::vector<Point> pts;
  for (std::size_t k = 0; k < 2 * arms; ++k) {
    const double a = 2 * 3.141592653589793 * static_cast<double>(k) / static_cast<double>(2 * arms);
    const double r = k % 2 ? 40 : 100;
    pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  const Polygon star(pts);
  for (auto _ : state) benchmark::DoNotOptimize(generate_hypotheses(star, {}, star.perimeter()));
}
BENCHMARK(BM_Hypotheses)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_EvaluateScore(benchmark::State& state) {
  const auto suite = fx::annotated_suite();
  const auto& shape = suite.front();
  const auto trace = decompose(shape.mask, DecomposeConfig{});
  for (auto _ : state) {
    const auto map = eval::density_map(shape.mask, {shape.lines}, 5);
    benchmark::DoNotOptimize(eval::score(map, trace.result.cuts, 5));
  }
}
BENCHMARK(BM_EvaluateScore)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
