#include "djg/generators.hpp"

#include <algorithm>

#include "djg/errors.hpp"
#include "djg/graph.hpp"
#include "djg/predicates.hpp"

namespace djg {

namespace {

template <class Obj>
void verify_shift_realization(const std::vector<Obj>& objs, const ShiftGraph& h,
                              const char* what) {
  std::vector<GeomObject> geom(objs.begin(), objs.end());
  DGraph g = build_graph(std::move(geom), Mode::disjointness, Space::euclidean);
  for (std::size_t a = 0; a < h.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < h.vertices.size(); ++b)
      if (g.adjacent(a, b) != h.adjacent(a, b))
        throw internal_error(std::string(what) + ": disjointness graph differs from H_m");
}

}  // namespace

ShiftGraph shift_graph_abstract(int m) {
  if (m < 2) throw invalid_input("shift_graph_abstract: m must be >= 2");
  ShiftGraph h;
  h.m = m;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) h.vertices.emplace_back(i, j);
  const std::size_t n = h.vertices.size();
  h.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto [i, j] = h.vertices[a];
      auto [k, l] = h.vertices[b];
      h.adj[a][b] = h.adj[b][a] = (j == k) || (l == i);
    }
  return h;
}

std::vector<PuncturedLine> gen_shift_pointed_lines(int m) {
  ShiftGraph h = shift_graph_abstract(m);
  std::vector<PuncturedLine> out;
  out.reserve(h.vertices.size());
  for (auto [i, j] : h.vertices) {
    // L_i ^ L_j = (-(i+j), -ij); it avoids every other carrier because
    // t^2 - t(i+j) + ij = (t-i)(t-j).
    Rat slope(i), intercept(i * i);
    AffinePoint hole(Rat(-(i + j)), Rat(-i * j));
    out.emplace_back(slope, intercept, hole);
  }
  verify_shift_realization(out, h, "gen_shift_pointed_lines");
  return out;
}

std::vector<TwoSegments> gen_shift_two_segments(int m) {
  ShiftGraph h = shift_graph_abstract(m);
  std::vector<TwoSegments> out;
  out.reserve(h.vertices.size());
  auto on_line = [](int i, const Rat& x) {
    return AffinePoint(x, Rat(i) * x + Rat(i * i));
  };
  const Rat left(-3 * m), right(m), gap(1, 2);
  for (auto [i, j] : h.vertices) {
    // All carrier crossings sit at integer x in [-2m+1, -3]; distinct holes
    // on one carrier differ by >= 1, so a 1/2-gap removes only the hole.
    Rat hole_x(-(i + j));
    Segment first(on_line(i, left), on_line(i, hole_x - gap));
    Segment second(on_line(i, hole_x + gap), on_line(i, right));
    out.emplace_back(first, second);
  }
  verify_shift_realization(out, h, "gen_shift_two_segments");
  return out;
}

namespace {

bool strictly_inside_triangle(const AffinePoint& p, const AffinePoint& a, const AffinePoint& b,
                              const AffinePoint& c) {
  return orient2d(a, b, p) > 0 && orient2d(b, c, p) > 0 && orient2d(c, a, p) > 0;
}

std::optional<ShiftPolylineLayout> try_shift_polyline(int m, const Rat& delta) {
  ShiftPolylineLayout layout;
  layout.delta = delta;
  const Rat sigma = delta * delta * delta;
  const Rat tau = sigma * delta * delta;
  for (int i = 1; i <= m; ++i) {
    // Apex on the rightward-opening arc x = (y-1)^2; the right side of the
    // arc is convex, apexes climb up and to the right.
    Rat y = Rat(1) + Rat(i) * delta;
    Rat x = (Rat(i) * delta) * (Rat(i) * delta);
    AffinePoint apex(x, y);
    // Isosceles triangle with horizontal base, centroid on the x-axis and
    // half-width 3y/4 (rational stand-in for the equilateral of the
    // original construction; only symmetry and nesting matter).
    Rat base_y = -y / 2;
    Rat half_width = Rat(3, 4) * y;
    layout.apex.push_back(apex);
    layout.q.emplace_back(x + half_width, base_y);
    layout.r.emplace_back(x - half_width, base_y);
    Rat sx = apex[0] + sigma * (layout.r.back()[0] - apex[0]);
    Rat sy = apex[1] + sigma * (layout.r.back()[1] - apex[1]);
    layout.s.emplace_back(sx, sy);
  }
  // Nesting: T_i strictly inside T_j for i < j.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& rj = layout.r[static_cast<std::size_t>(j)];
      const auto& qj = layout.q[static_cast<std::size_t>(j)];
      const auto& pj = layout.apex[static_cast<std::size_t>(j)];
      for (const auto* v : {&layout.apex[static_cast<std::size_t>(i)],
                            &layout.q[static_cast<std::size_t>(i)],
                            &layout.r[static_cast<std::size_t>(i)]})
        if (!strictly_inside_triangle(*v, rj, qj, pj)) return std::nullopt;
    }
  try {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        const AffinePoint& pi = layout.apex[static_cast<std::size_t>(i - 1)];
        const AffinePoint& pj = layout.apex[static_cast<std::size_t>(j - 1)];
        // x-axis crossing of the chord p_i p_j, nudged left.
        Rat slope_xy = (pj[0] - pi[0]) / (pj[1] - pi[1]);
        Rat xi = pi[0] - pi[1] * slope_xy;
        AffinePoint t(xi - tau, Rat(0));
        layout.polylines.emplace_back(std::vector<AffinePoint>{
            t, pj, layout.q[static_cast<std::size_t>(j - 1)],
            layout.r[static_cast<std::size_t>(j - 1)], layout.s[static_cast<std::size_t>(j - 1)]});
      }
  } catch (const invalid_input&) {
    return std::nullopt;  // degenerate path at this parameter scale
  }
  return layout;
}

}  // namespace

ShiftPolylineLayout gen_shift_polyline_layout(int m) {
  ShiftGraph h = shift_graph_abstract(m);
  Rat delta(1, 8 * m);
  for (int attempt = 0; attempt < 16; ++attempt, delta /= 2) {
    auto layout = try_shift_polyline(m, delta);
    if (!layout) continue;
    try {
      verify_shift_realization(layout->polylines, h, "gen_shift_polyline");
    } catch (const internal_error&) {
      continue;
    }
    return *std::move(layout);
  }
  throw invalid_input("gen_shift_polyline: parameter search exhausted");
}

std::vector<Polyline> gen_shift_polyline(int m) { return gen_shift_polyline_layout(m).polylines; }

namespace {

AffinePoint moment_point(int t) {
  return AffinePoint(Rat(t), Rat(t) * Rat(t), Rat(t) * Rat(t) * Rat(t));
}

}  // namespace

std::vector<EuclLine> gen_kneser_lines(int k) {
  if (k < 1) throw invalid_input("gen_kneser_lines: k must be >= 1");
  const int n = 2 * k + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  std::vector<EuclLine> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.push_back(EuclLine::through(moment_point(a), moment_point(b)));

  std::vector<GeomObject> geom(out.begin(), out.end());
  DGraph g = build_graph(std::move(geom), Mode::disjointness, Space::euclidean);
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      auto [a, b] = pairs[x];
      auto [c, d] = pairs[y];
      bool kneser_edge = a != c && a != d && b != c && b != d;
      if (g.adjacent(x, y) != kneser_edge)
        throw internal_error("gen_kneser_lines: graph differs from the Kneser graph");
    }
  return out;
}

namespace {

struct CombLine {
  std::vector<int> fixed;  // -1 marks a moving coordinate
  std::vector<int> point_at(int j) const {
    std::vector<int> p(fixed.size());
    for (std::size_t i = 0; i < fixed.size(); ++i) p[i] = fixed[i] < 0 ? j : fixed[i];
    return p;
  }
};

bool comb_lines_share_point(const CombLine& a, const CombLine& b, int m) {
  for (int j = 1; j <= m; ++j)
    for (int j2 = 1; j2 <= m; ++j2)
      if (a.point_at(j) == b.point_at(j2)) return true;
  return false;
}

}  // namespace

std::vector<EuclLine> gen_hales_jewett_lines(int m, int d, std::mt19937_64& rng) {
  if (m < 2 || d < 2) throw invalid_input("gen_hales_jewett_lines: need m >= 2 and d >= 2");
  std::vector<CombLine> lines;
  // Enumerate over template vectors in {1..m, moving}^d, skipping all-fixed.
  std::vector<int> tmpl(static_cast<std::size_t>(d), 1);
  for (;;) {
    bool has_moving = false;
    for (int v : tmpl)
      if (v < 0) has_moving = true;
    if (has_moving) lines.push_back(CombLine{tmpl});
    int pos = 0;
    while (pos < d) {
      int& v = tmpl[static_cast<std::size_t>(pos)];
      if (v < 0) {
        v = 1;
        ++pos;
      } else if (v < m) {
        ++v;
        break;
      } else {
        v = -1;
        break;
      }
    }
    if (pos == d) break;
  }
  std::size_t expected = 1;
  for (int i = 0; i < d; ++i) expected *= static_cast<std::size_t>(m + 1);
  std::size_t md = 1;
  for (int i = 0; i < d; ++i) md *= static_cast<std::size_t>(m);
  if (lines.size() != expected - md)
    throw internal_error("gen_hales_jewett_lines: combinatorial line count mismatch");

  const std::size_t nl = lines.size();
  // Ground truth in any dimension: two combinatorial lines intersect iff they
  // share a grid point; same moving-coordinate sets mean parallel carriers.
  enum Rel { kShare, kParallel, kSkew };
  std::vector<std::vector<Rel>> want(nl, std::vector<Rel>(nl, kSkew));
  auto moving_set = [&](const CombLine& L) {
    std::vector<bool> s;
    for (int v : L.fixed) s.push_back(v < 0);
    return s;
  };
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t y = x + 1; y < nl; ++y) {
      Rel r;
      if (comb_lines_share_point(lines[x], lines[y], m))
        r = kShare;
      else if (moving_set(lines[x]) == moving_set(lines[y]))
        r = kParallel;
      else
        r = kSkew;
      want[x][y] = want[y][x] = r;
    }

  for (int attempt = 0; attempt < 64; ++attempt) {
    // Base = first point, direction = moving-coordinate indicator, pushed to
    // R^3 by a random integer matrix (or the identity embedding for d <= 3).
    std::vector<std::vector<Rat>> mat(3, std::vector<Rat>(static_cast<std::size_t>(d), Rat(0)));
    if (d <= 3) {
      for (int i = 0; i < d && i < 3; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    } else {
      for (auto& row : mat)
        for (Rat& v : row) v = Rat(Int(rng() % 41) - 20);
    }
    std::vector<EuclLine> out;
    out.reserve(nl);
    bool ok = true;
    for (const CombLine& cl : lines) {
      std::vector<int> base = cl.point_at(1);
      std::array<Rat, 3> b{Rat(0), Rat(0), Rat(0)}, dir{Rat(0), Rat(0), Rat(0)};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < d; ++j) {
          b[static_cast<std::size_t>(i)] +=
              mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
              Rat(base[static_cast<std::size_t>(j)]);
          if (cl.fixed[static_cast<std::size_t>(j)] < 0)
            dir[static_cast<std::size_t>(i)] +=
                mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
      if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0) {
        ok = false;
        break;
      }
      out.push_back(EuclLine::from_base_dir(AffinePoint(b[0], b[1], b[2]), dir));
    }
    if (!ok) continue;
    for (std::size_t x = 0; x < nl && ok; ++x)
      for (std::size_t y = x + 1; y < nl; ++y) {
        LineRelation r = eucl_lines_relation(out[x], out[y]).relation;
        bool good = (want[x][y] == kShare && r == LineRelation::intersecting) ||
                    (want[x][y] == kParallel && r == LineRelation::parallel) ||
                    (want[x][y] == kSkew && r == LineRelation::skew);
        if (!good) {
          ok = false;
          break;
        }
      }
    if (ok) return out;
    if (d <= 3)
      throw internal_error("gen_hales_jewett_lines: direct embedding failed verification");
  }
  throw invalid_input("gen_hales_jewett_lines: projection attempts exhausted");
}

std::vector<EuclLine> gen_linegraph_lines(int num_vertices,
                                          const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices < 2) throw invalid_input("gen_linegraph_lines: need at least two vertices");
  for (auto [u, v] : edges)
    if (u == v || u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw invalid_input("gen_linegraph_lines: bad edge");
  std::vector<EuclLine> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges)
    out.push_back(EuclLine::through(moment_point(u + 1), moment_point(v + 1)));

  std::vector<GeomObject> geom(out.begin(), out.end());
  DGraph g = build_graph(std::move(geom), Mode::intersection, Space::euclidean);
  for (std::size_t x = 0; x < edges.size(); ++x)
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      auto [a, b] = edges[x];
      auto [c, d] = edges[y];
      bool shares = a == c || a == d || b == c || b == d;
      if (g.adjacent(x, y) != shares)
        throw internal_error("gen_linegraph_lines: intersection graph is not the line graph");
    }
  return out;
}

}  // namespace djg
