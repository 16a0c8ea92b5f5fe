#include <doctest.h>

#include "djg/errors.hpp"
#include "djg/generators.hpp"
#include "djg/oracles.hpp"
#include "djg/predicates.hpp"
#include "support.hpp"

using namespace djg;
using namespace djg::test;

namespace {

DGraph graph_of_objects(std::vector<GeomObject> objs, Mode mode, Space space) {
  return build_graph(std::move(objs), mode, space);
}

DGraph abstract_cycle(int n) {
  // use collinear segments to realize a path-free abstract test? simpler:
  // build the graph directly through the DGraph constructor
  std::vector<GeomObject> objs;
  for (int i = 0; i < n; ++i) objs.emplace_back(S2(4 * i, 0, 4 * i + 1, 0));
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    adj[i][j] = adj[j][i] = true;
  }
  return DGraph(std::move(objs), Mode::disjointness, Space::euclidean, std::move(adj));
}

std::vector<ProjLine> pluckers(const std::vector<EuclLine>& lines) {
  std::vector<ProjLine> out;
  for (const EuclLine& l : lines) out.push_back(l.plucker());
  return out;
}

std::vector<ProjLine> random_proj_lines(std::mt19937_64& rng, std::size_t n) {
  std::vector<ProjLine> out;
  while (out.size() < n) {
    // bias toward structure: half the lines pass through one of two hubs
    AffinePoint a = random_point(rng, 3, 4);
    AffinePoint b = random_point(rng, 3, 4);
    if (rng() % 2) a = (rng() % 2) ? P3(0, 0, 0) : P3(1, 1, 1);
    if (a == b) continue;
    out.push_back(EuclLine::through(a, b).plucker());
  }
  return out;
}

}  // namespace

TEST_CASE("exact_chromatic") {
  CHECK(exact_chromatic(abstract_cycle(5)).chi == 3);
  CHECK(exact_chromatic(abstract_cycle(6)).chi == 2);

  SUBCASE("H4 realization: chi = 2") {
    auto objs = gen_shift_pointed_lines(4);
    DGraph g = graph_of_objects({objs.begin(), objs.end()}, Mode::disjointness, Space::euclidean);
    CHECK(exact_chromatic(g).chi == 2);
  }
  SUBCASE("kneser k=2 disjointness: chi = 3, omega = 2") {
    auto lines = gen_kneser_lines(2);
    DGraph g = graph_of_objects({lines.begin(), lines.end()}, Mode::disjointness, Space::euclidean);
    CHECK(exact_chromatic(g).chi == 3);
    CHECK(exact_clique(g).value == 2);
  }
  SUBCASE("coloring returned is proper and uses chi colors") {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 10; ++trial) {
      auto segs = random_segments(rng, 12, 2, 8);
      DGraph g = graph_of_objects({segs.begin(), segs.end()}, Mode::disjointness, Space::euclidean);
      OracleColoring r = exact_chromatic(g);
      int used = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        used = std::max(used, r.colors[i] + 1);
        for (std::size_t j = i + 1; j < g.size(); ++j)
          if (g.adjacent(i, j)) CHECK(r.colors[i] != r.colors[j]);
      }
      CHECK(used == r.chi);
    }
  }
  SUBCASE("cap is enforced") {
    std::mt19937_64 rng(82);
    auto segs = random_segments(rng, 11, 2, 8);
    DGraph g = graph_of_objects({segs.begin(), segs.end()}, Mode::disjointness, Space::euclidean);
    CHECK_THROWS_AS(exact_chromatic(g, 10), cap_exceeded);
  }
}

TEST_CASE("exact_clique and exact_independence") {
  SUBCASE("pairwise disjoint segments: omega = n, alpha = 1") {
    std::vector<GeomObject> objs;
    for (int i = 0; i < 7; ++i) objs.emplace_back(S2(0, i, 1, i));
    DGraph g = graph_of_objects(std::move(objs), Mode::disjointness, Space::euclidean);
    CHECK(exact_clique(g).value == 7);
    CHECK(exact_independence(g).value == 1);
  }
  SUBCASE("H6 realization is triangle-free with edges: omega = 2") {
    auto objs = gen_shift_pointed_lines(6);
    DGraph g = graph_of_objects({objs.begin(), objs.end()}, Mode::disjointness, Space::euclidean);
    CHECK(exact_clique(g).value == 2);
    CHECK(is_triangle_free(g));
  }
  SUBCASE("witness is a real clique") {
    std::mt19937_64 rng(83);
    auto segs = random_segments(rng, 14, 2, 8);
    DGraph g = graph_of_objects({segs.begin(), segs.end()}, Mode::disjointness, Space::euclidean);
    OracleSet w = exact_clique(g);
    for (std::size_t i = 0; i < w.members.size(); ++i)
      for (std::size_t j = i + 1; j < w.members.size(); ++j)
        CHECK(g.adjacent(static_cast<std::size_t>(w.members[i]),
                         static_cast<std::size_t>(w.members[j])));
  }
}

TEST_CASE("omega_intersection_lines") {
  SUBCASE("four coplanar lines in general position: omega 4 via plane witness") {
    std::vector<ProjLine> lines;
    for (int i = 1; i <= 4; ++i)
      lines.push_back(EuclLine::from_base_dir(P3(i, 0, 0), {Rat(1), Rat(i), Rat(0)}).plucker());
    OmegaLinesResult r = omega_intersection_lines(lines);
    CHECK(r.omega == 4);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == MaximalCliqueWitness::Kind::plane);
  }
  SUBCASE("pairwise skew: omega 1") {
    std::vector<ProjLine> lines;
    for (int i = 1; i <= 5; ++i)
      lines.push_back(EuclLine::from_base_dir(P3(0, i, 0), {Rat(1), Rat(0), Rat(i)}).plucker());
    CHECK(omega_intersection_lines(lines).omega == 1);
  }
  SUBCASE("pencil of three plus a skew line: omega 3 via point witness") {
    std::vector<ProjLine> lines;
    for (int i = 1; i <= 3; ++i)
      lines.push_back(EuclLine::from_base_dir(P3(0, 0, 0), {Rat(1), Rat(i), Rat(i * i)}).plucker());
    lines.push_back(EuclLine::from_base_dir(P3(0, 0, 5), {Rat(0), Rat(1), Rat(0)}).plucker());
    OmegaLinesResult r = omega_intersection_lines(lines);
    CHECK(r.omega == 3);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == MaximalCliqueWitness::Kind::point);
    CHECK(r.witness->point == HomPoint::from_affine(P3(0, 0, 0)));
  }
  SUBCASE("agrees with brute force on random instances") {
    std::mt19937_64 rng(85);
    for (int trial = 0; trial < 30; ++trial) {
      auto lines = random_proj_lines(rng, 8);
      OmegaLinesResult fast = omega_intersection_lines(lines);
      DGraph g = graph_of_objects({lines.begin(), lines.end()}, Mode::intersection,
                                  Space::projective);
      CHECK(static_cast<int>(fast.omega) == exact_clique(g).value);
    }
  }
}

TEST_CASE("clique_cover_at_most_k") {
  SUBCASE("pencil coverable by one point clique") {
    std::vector<ProjLine> lines;
    for (int i = 1; i <= 5; ++i)
      lines.push_back(EuclLine::from_base_dir(P3(0, 0, 0), {Rat(1), Rat(i), Rat(0)}).plucker());
    auto cover = clique_cover_at_most_k(lines, 1);
    REQUIRE(cover.has_value());
    CHECK(cover->size() == 1);
  }
  SUBCASE("three pairwise skew need three cliques") {
    std::vector<ProjLine> lines;
    for (int i = 1; i <= 3; ++i)
      lines.push_back(EuclLine::from_base_dir(P3(0, i, 0), {Rat(1), Rat(0), Rat(i)}).plucker());
    CHECK(!clique_cover_at_most_k(lines, 2).has_value());
    CHECK(clique_cover_at_most_k(lines, 3).has_value());
  }
  SUBCASE("kneser k=2: cover by 3 cliques exists (two stars + a triangle plane)") {
    auto lines = pluckers(gen_kneser_lines(2));
    auto cover = clique_cover_at_most_k(lines, 3);
    REQUIRE(cover.has_value());
    CHECK(cover->size() <= 3);
    // covers all ten lines
    std::vector<bool> seen(10, false);
    for (const auto& w : *cover)
      for (int v : w.members) seen[static_cast<std::size_t>(v)] = true;
    for (bool b : seen) CHECK(b);
    CHECK(!clique_cover_at_most_k(lines, 2).has_value());
  }
  SUBCASE("k cap is enforced") {
    std::vector<ProjLine> lines = {supporting_line(S3(0, 0, 0, 1, 0, 0)).plucker()};
    CHECK_THROWS_AS(clique_cover_at_most_k(lines, 5), cap_exceeded);
  }
}

TEST_CASE("perfection on pointed cells") {
  // chi == omega on disjointness graphs of lines all meeting a common line
  std::mt19937_64 rng(87);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ProjLine> cell = {supporting_line(S3(0, 0, 0, 1, 0, 0)).plucker()};
    std::size_t n = 3 + rng() % 8;
    while (cell.size() < n + 1) {
      Rat t = random_rat(rng, 6);
      AffinePoint base(t, Rat(0), Rat(0));
      AffinePoint other = random_point(rng, 3, 5);
      if (other == base) continue;
      EuclLine l = EuclLine::through(base, other);
      if (l.plucker() == cell[0]) continue;
      cell.push_back(l.plucker());
    }
    DGraph g = graph_of_objects({cell.begin(), cell.end()}, Mode::disjointness, Space::projective);
    CHECK(exact_chromatic(g).chi == exact_clique(g).value);
  }
}

namespace {

// Plain enumeration over all color assignments, for cross-checking the
// branch-and-bound solver on tiny graphs.
bool k_colorable_brute(const DGraph& g, int k) {
  const std::size_t n = g.size();
  std::vector<int> colors(n, 0);
  for (;;) {
    bool proper = true;
    for (std::size_t i = 0; i < n && proper; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (g.adjacent(i, j) && colors[i] == colors[j]) {
          proper = false;
          break;
        }
    if (proper) return true;
    std::size_t pos = 0;
    while (pos < n && colors[pos] == k - 1) colors[pos++] = 0;
    if (pos == n) return false;
    ++colors[pos];
  }
}

}  // namespace

TEST_CASE("exact_chromatic agrees with plain enumeration on tiny graphs") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 5;  // n <= 7
    std::vector<GeomObject> objs;
    for (std::size_t i = 0; i < n; ++i) objs.emplace_back(S2(4 * static_cast<int>(i), 0, 4 * static_cast<int>(i) + 1, 0));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 2) adj[i][j] = adj[j][i] = true;
    DGraph g(std::move(objs), Mode::disjointness, Space::euclidean, std::move(adj));
    int chi = exact_chromatic(g).chi;
    CHECK(k_colorable_brute(g, chi));
    if (chi > 1) CHECK(!k_colorable_brute(g, chi - 1));
    int omega = exact_clique(g).value;
    CHECK(omega <= chi);
  }
}

TEST_CASE("omega_intersection_lines counts duplicates by multiplicity") {
  std::vector<ProjLine> lines;
  ProjLine xaxis = supporting_line(S3(0, 0, 0, 1, 0, 0)).plucker();
  lines.push_back(xaxis);
  lines.push_back(xaxis);
  lines.push_back(xaxis);  // three copies pairwise intersect
  lines.push_back(EuclLine::from_base_dir(P3(0, 5, 0), {Rat(0), Rat(0), Rat(1)}).plucker());
  OmegaLinesResult r = omega_intersection_lines(lines);
  CHECK(r.omega == 3);
  CHECK(r.witness->members == std::vector<int>{0, 1, 2});
}
