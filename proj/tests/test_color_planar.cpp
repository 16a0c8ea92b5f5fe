#include <doctest.h>

#include <set>

#include "djg/color_planar.hpp"
#include "djg/errors.hpp"
#include "djg/graph.hpp"
#include "djg/oracles.hpp"
#include "djg/predicates.hpp"
#include "support.hpp"

using namespace djg;
using namespace djg::test;

namespace {

DGraph graph_of(const std::vector<Segment>& segs) {
  std::vector<GeomObject> objs(segs.begin(), segs.end());
  return build_graph(objs, Mode::disjointness, Space::euclidean);
}

}  // namespace

TEST_CASE("order_compare on canonical configurations") {
  SUBCASE("nested below") {
    OrderMask m = order_compare(S2(0, 0, 3, 0), S2(1, 1, 2, 1));
    CHECK(precedes(m, OrderId::nest_below));
    CHECK(!precedes(m, OrderId::nest_above));
    CHECK(!precedes(m, OrderId::stag_below));
    CHECK(!precedes(m, OrderId::stag_above));
    CHECK(!succeeds(m, OrderId::nest_below));
  }
  SUBCASE("staggered below") {
    OrderMask m = order_compare(S2(0, 0, 2, 0), S2(1, 1, 3, 1));
    CHECK(precedes(m, OrderId::stag_below));
    CHECK(!precedes(m, OrderId::stag_above));
    CHECK(!precedes(m, OrderId::nest_below));
  }
  SUBCASE("x-disjoint pairs lie in both staggered orders") {
    OrderMask m = order_compare(S2(0, 0, 1, 0), S2(2, 5, 3, 5));
    CHECK(precedes(m, OrderId::stag_below));
    CHECK(precedes(m, OrderId::stag_above));
    CHECK(!precedes(m, OrderId::nest_below));
    CHECK(!precedes(m, OrderId::nest_above));
  }
  SUBCASE("intersecting pairs are incomparable") {
    CHECK(order_compare(S2(0, 0, 2, 2), S2(0, 2, 2, 0)) == 0);
    CHECK(order_compare(S2(0, 0, 1, 0), S2(1, 0, 2, 1)) == 0);  // touching
  }
  SUBCASE("vertical segments rejected") {
    CHECK_THROWS_AS(order_compare(S2(0, 0, 0, 1), S2(1, 0, 2, 0)), invalid_input);
  }
}

TEST_CASE("order properties on random pairs and triples") {
  std::mt19937_64 rng(41);
  // comparability implies disjointness, and disjoint pairs are comparable
  for (int trial = 0; trial < 400; ++trial) {
    Segment s = random_segment(rng, 2, 12);
    Segment t = random_segment(rng, 2, 12);
    if (s.a()[0] == s.b()[0] || t.a()[0] == t.b()[0]) continue;
    OrderMask m = order_compare(s, t);
    bool comparable = m != 0;
    bool disjoint = segments_disjoint(s, t);
    CHECK(comparable == disjoint);
    // antisymmetry within each order
    for (OrderId o : kAllOrders) CHECK(!(precedes(m, o) && succeeds(m, o)));
    // symmetry of the mask itself
    OrderMask rev = order_compare(t, s);
    for (OrderId o : kAllOrders) {
      CHECK(precedes(m, o) == succeeds(rev, o));
      CHECK(succeeds(m, o) == precedes(rev, o));
    }
  }
  // transitivity on triples
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Segment a = random_segment(rng, 2, 8);
    Segment b = random_segment(rng, 2, 8);
    Segment c = random_segment(rng, 2, 8);
    if (a.a()[0] == a.b()[0] || b.a()[0] == b.b()[0] || c.a()[0] == c.b()[0]) continue;
    OrderMask ab = order_compare(a, b), bc = order_compare(b, c), ac = order_compare(a, c);
    for (OrderId o : kAllOrders) {
      if (precedes(ab, o) && precedes(bc, o)) {
        CHECK(precedes(ac, o));
        ++checked;
      }
      if (succeeds(ab, o) && succeeds(bc, o)) {
        CHECK(succeeds(ac, o));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("mirsky decomposition") {
  SUBCASE("three stacked parallel segments") {
    std::vector<Segment> segs = {S2(0, 0, 3, 0), S2(0, 1, 3, 1), S2(0, 2, 3, 2)};
    MirskyResult r = mirsky_decompose(segs, OrderId::nest_below);
    CHECK(r.heights == std::vector<int>{1, 2, 3});
    CHECK(r.longest_chain == std::vector<int>{0, 1, 2});
  }
  SUBCASE("concurrent segments: all heights 1") {
    std::vector<Segment> segs;
    for (int i = 1; i <= 6; ++i) segs.push_back(Segment(P2(-i, -1), P2(i, 1)));
    for (OrderId o : kAllOrders) {
      MirskyResult r = mirsky_decompose(segs, o);
      for (int h : r.heights) CHECK(h == 1);
      CHECK(r.longest_chain.size() == 1);
    }
  }
  SUBCASE("staircase of 4 staggered segments") {
    std::vector<Segment> segs = {S2(0, 0, 3, 0), S2(2, 1, 5, 1), S2(4, 2, 7, 2), S2(6, 3, 9, 3)};
    MirskyResult r = mirsky_decompose(segs, OrderId::stag_below);
    CHECK(r.heights == std::vector<int>{1, 2, 3, 4});
    CHECK(r.longest_chain.size() == 4);
  }
}

TEST_CASE("color_planar_segments") {
  std::mt19937_64 rng(43);
  SUBCASE("three stacked parallels: 3 colors, clique of 3") {
    std::vector<Segment> segs = {S2(0, 0, 3, 0), S2(0, 1, 3, 1), S2(0, 2, 3, 2)};
    Certificate cert = color_planar_segments(segs, rng);
    CHECK(cert.num_colors() == 3);
    CHECK(cert.clique.size() == 3);
    CHECK(verify_certificate(graph_of(segs), cert).ok());
  }
  SUBCASE("pairwise-crossing star: one color") {
    std::vector<Segment> segs;
    for (int i = 1; i <= 8; ++i) segs.push_back(Segment(P2(-i, -1), P2(i, 1)));
    Certificate cert = color_planar_segments(segs, rng);
    CHECK(cert.num_colors() == 1);
    CHECK(cert.clique.size() == 1);
    CHECK(verify_certificate(graph_of(segs), cert).ok());
  }
  SUBCASE("random instances: bound, properness, oracle sandwich") {
    for (int trial = 0; trial < 10; ++trial) {
      auto segs = random_segments(rng, 10, 2, 8);
      DGraph g = graph_of(segs);
      Certificate cert = color_planar_segments(segs, rng);
      VerifyReport rep = verify_certificate(g, cert);
      CHECK(rep.ok());
      std::size_t k = cert.clique.size();
      CHECK(Int(cert.num_colors()) <= Int(k) * Int(k) * Int(k) * Int(k));
      OracleColoring chi = exact_chromatic(g);
      OracleSet omega = exact_clique(g);
      CHECK(chi.chi <= static_cast<int>(cert.num_colors()));
      CHECK(omega.value >= static_cast<int>(k));
    }
  }
  SUBCASE("coverage: every disjoint pair comparable in some order") {
    for (int trial = 0; trial < 50; ++trial) {
      Segment s = random_segment(rng, 2, 10);
      Segment t = random_segment(rng, 2, 10);
      if (s.a()[0] == s.b()[0] || t.a()[0] == t.b()[0]) continue;
      if (segments_disjoint(s, t)) CHECK(order_compare(s, t) != 0);
    }
  }
  SUBCASE("chains are cliques of the disjointness graph") {
    for (int trial = 0; trial < 10; ++trial) {
      auto segs = random_segments(rng, 20, 2, 10);
      DGraph g = graph_of(segs);
      Certificate cert = color_planar_segments(segs, rng);
      for (std::size_t i = 0; i < cert.clique.size(); ++i)
        for (std::size_t j = i + 1; j < cert.clique.size(); ++j)
          CHECK(g.adjacent(static_cast<std::size_t>(cert.clique[i]),
                           static_cast<std::size_t>(cert.clique[j])));
    }
  }
  SUBCASE("empty and singleton input") {
    Certificate empty = color_planar_segments(std::vector<Segment>{}, rng);
    CHECK(empty.num_colors() == 0);
    CHECK(verify_certificate(graph_of({}), empty).ok());
    std::vector<Segment> one = {S2(0, 0, 1, 1)};
    Certificate c1 = color_planar_segments(one, rng);
    CHECK(c1.num_colors() == 1);
    CHECK(c1.clique.size() == 1);
    CHECK(verify_certificate(graph_of(one), c1).ok());
  }
}

TEST_CASE("collinear-heavy planar instances") {
  std::mt19937_64 rng(97);
  // chains of collinear overlapping and touching segments plus crossings
  std::vector<Segment> segs;
  for (int i = 0; i < 6; ++i) segs.push_back(S2(2 * i, 0, 2 * i + 3, 0));      // overlaps
  for (int i = 0; i < 4; ++i) segs.push_back(S2(3 * i, 1, 3 * (i + 1), 1));    // touching chain
  segs.push_back(S2(0, -1, 14, 2));                                            // long crossing
  segs.push_back(S2(5, -2, 5, 3));                                             // vertical
  DGraph g = graph_of(segs);
  Certificate cert = color_planar_segments(segs, rng);
  CHECK(verify_certificate(g, cert).ok());
  CHECK(exact_chromatic(g).chi <= static_cast<int>(cert.num_colors()));
  CHECK(exact_clique(g).value >= static_cast<int>(cert.clique.size()));
}

TEST_CASE("mirsky heights satisfy the fixpoint property") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto segs = random_segments(rng, 15, 2, 8);
    bool vertical = false;
    for (const Segment& s : segs)
      if (s.a()[0] == s.b()[0]) vertical = true;
    if (vertical) continue;
    for (OrderId o : kAllOrders) {
      MirskyResult r = mirsky_decompose(segs, o);
      for (std::size_t v = 0; v < segs.size(); ++v) {
        int expect = 1;
        for (std::size_t u = 0; u < segs.size(); ++u) {
          if (u == v) continue;
          if (precedes(order_compare(segs[u], segs[v]), o))
            expect = std::max(expect, r.heights[u] + 1);
        }
        CHECK(r.heights[v] == expect);
      }
      // the reported chain is a chain and realizes the max height
      int maxh = 0;
      for (int h : r.heights) maxh = std::max(maxh, h);
      CHECK(static_cast<int>(r.longest_chain.size()) == maxh);
      for (std::size_t i = 0; i + 1 < r.longest_chain.size(); ++i)
        CHECK(precedes(order_compare(segs[static_cast<std::size_t>(r.longest_chain[i])],
                                     segs[static_cast<std::size_t>(r.longest_chain[i + 1])]),
                       o));
    }
  }
}
