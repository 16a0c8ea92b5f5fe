#include <benchmark/benchmark.h>

#include <random>

#include "djg/graph.hpp"
#include "djg/predicates.hpp"

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

static void BM_SegmentsDisjointPair2D(benchmark::State& state) {
  auto segs = random_segments(64, 2, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    bool d = segments_disjoint(segs[i % 64], segs[(i + 17) % 64]);
    benchmark::DoNotOptimize(d);
    ++i;
  }
}
BENCHMARK(BM_SegmentsDisjointPair2D);

static void BM_SegmentsDisjointPair3D(benchmark::State& state) {
  auto segs = random_segments(64, 3, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    bool d = segments_disjoint(segs[i % 64], segs[(i + 17) % 64]);
    benchmark::DoNotOptimize(d);
    ++i;
  }
}
BENCHMARK(BM_SegmentsDisjointPair3D);

static void BM_PluckerSideForm(benchmark::State& state) {
  auto lines = random_lines(64, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    Int s = plucker_side_form(lines[i % 64], lines[(i + 29) % 64]);
    benchmark::DoNotOptimize(s);
    ++i;
  }
}
BENCHMARK(BM_PluckerSideForm);

static void BM_BuildGraphSegments(benchmark::State& state) {
  auto segs = random_segments(static_cast<std::size_t>(state.range(0)), 2, 4);
  std::vector<GeomObject> objs(segs.begin(), segs.end());
  for (auto _ : state) {
    DGraph g = build_graph(objs, Mode::disjointness, Space::euclidean);
    benchmark::DoNotOptimize(g.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraphSegments)->RangeMultiplier(2)->Range(32, 256)->Complexity();

BENCHMARK_MAIN();
