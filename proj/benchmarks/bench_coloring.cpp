#include <benchmark/benchmark.h>

#include <random>

#include "djg/color_lines.hpp"
#include "djg/color_planar.hpp"
#include "djg/color_segments3d.hpp"

using namespace djg;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  return Rat(static_cast<long long>(rng() % 81) - 40, 1 + static_cast<long long>(rng() % 8));
}

AffinePoint random_point(std::mt19937_64& rng, std::size_t dim) {
  std::vector<Rat> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(random_rat(rng));
  return AffinePoint(c);
}

std::vector<Segment> random_segments(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Segment> out;
  while (out.size() < n) {
    AffinePoint a = random_point(rng, dim);
    AffinePoint b = random_point(rng, dim);
    if (!(a == b)) out.emplace_back(a, b);
  }
  return out;
}

std::vector<ProjLine> random_lines(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ProjLine> out;
  while (out.size() < n) {
    AffinePoint a = random_point(rng, 3);
    AffinePoint b = random_point(rng, 3);
    if (a == b) continue;
    out.push_back(EuclLine::through(a, b).plucker());
  }
  return out;
}

}  // namespace

static void BM_ColorPlanarSegments(benchmark::State& state) {
  auto segs = random_segments(static_cast<std::size_t>(state.range(0)), 2, 11);
  for (auto _ : state) {
    std::mt19937_64 rng(1);
    Certificate cert = color_planar_segments(segs, rng);
    benchmark::DoNotOptimize(cert.num_colors());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ColorPlanarSegments)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void BM_ColorProjectiveLines(benchmark::State& state) {
  auto lines = random_lines(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) {
    Certificate cert = color_projective_lines(lines);
    benchmark::DoNotOptimize(cert.num_colors());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ColorProjectiveLines)->RangeMultiplier(2)->Range(32, 128)->Complexity();

static void BM_ColorSegments3D(benchmark::State& state) {
  auto segs = random_segments(static_cast<std::size_t>(state.range(0)), 3, 13);
  for (auto _ : state) {
    std::mt19937_64 rng(1);
    Certificate cert = color_segments_3d(segs, rng);
    benchmark::DoNotOptimize(cert.num_colors());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ColorSegments3D)->RangeMultiplier(2)->Range(16, 64)->Complexity();

BENCHMARK_MAIN();
