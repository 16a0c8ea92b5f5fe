#include "djg/predicates.hpp"

#include "djg/errors.hpp"

namespace djg {

namespace {

// One nonzero kernel vector of an exact rational matrix (rows x cols),
// or empty when the kernel is trivial. Reduces to RREF, then sets the
// first free variable to 1.
std::vector<Rat> nullspace_one(std::vector<std::vector<Rat>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<int> pivot_row_of_col(cols, -1);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t sel = prow;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[prow]);
    Rat piv = m[prow][col];
    for (std::size_t j = col; j < cols; ++j) m[prow][j] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != prow && m[i][col] != 0) {
        Rat f = m[i][col];
        for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[prow][j];
      }
    }
    pivot_row_of_col[col] = static_cast<int>(prow);
    ++prow;
  }
  int free_col = -1;
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] < 0) {
      free_col = static_cast<int>(c);
      break;
    }
  if (free_col < 0) return {};
  std::vector<Rat> x(cols, Rat(0));
  x[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t c = 0; c < cols; ++c) {
    int pr = pivot_row_of_col[c];
    if (pr >= 0) x[c] = -m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(free_col)];
  }
  return x;
}

std::size_t rank_of(std::vector<std::vector<Rat>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t sel = prow;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[prow]);
    for (std::size_t i = prow + 1; i < rows; ++i) {
      if (m[i][col] != 0) {
        Rat f = m[i][col] / m[prow][col];
        for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[prow][j];
      }
    }
    ++prow;
  }
  return prow;
}

std::vector<std::vector<Rat>> rows_from_points(std::initializer_list<const HomPoint*> pts) {
  std::vector<std::vector<Rat>> m;
  for (const HomPoint* p : pts) {
    std::vector<Rat> row(4);
    for (std::size_t i = 0; i < 4; ++i) row[i] = Rat((*p)[i]);
    m.push_back(std::move(row));
  }
  return m;
}

bool proportional4(const std::array<Int, 4>& a, const std::array<Int, 4>& b) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

struct PairSolve {
  enum Kind { kSkewLines, kCrossing, kCollinear, kParallelDistinct } kind;
  // kCrossing: the line meet is at parameters s = ns/den, t = nt/den.
  Int ns, nt, den;
  Rat lo2, hi2;  // kCollinear: t-segment's parameter interval along u

  bool params_in_unit_box() const {
    if (den > 0) return ns >= 0 && ns <= den && nt >= 0 && nt <= den;
    return ns <= 0 && ns >= den && nt <= 0 && nt >= den;
  }
};

// Solve a1 + s*u = c1 + t*v over R^d for two nondegenerate segments.
// Each equation row is scaled to integers independently (the solution set is
// row-scaling invariant), so the hot path runs on plain integers.
PairSolve solve_pair(const Segment& sa, const Segment& sb) {
  const std::size_t d = sa.dim();
  std::vector<Int> u(d), v(d), w(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Rat& aa = sa.a()[i];
    const Rat& ab = sa.b()[i];
    const Rat& ba = sb.a()[i];
    const Rat& bb = sb.b()[i];
    Int l = boost::multiprecision::lcm(boost::multiprecision::lcm(rat_den(aa), rat_den(ab)),
                                       boost::multiprecision::lcm(rat_den(ba), rat_den(bb)));
    auto scaled = [&](const Rat& x) { return Int(rat_num(x) * (l / rat_den(x))); };
    Int a = scaled(aa), b = scaled(ab), c = scaled(ba), e = scaled(bb);
    u[i] = b - a;
    v[i] = e - c;
    w[i] = c - a;
  }
  // Look for an independent pair of rows of [u | -v].
  std::size_t i0 = 0;
  while (u[i0] == 0 && v[i0] == 0) ++i0;
  int j0 = -1;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == i0) continue;
    if (u[i0] * v[j] != u[j] * v[i0]) {
      j0 = static_cast<int>(j);
      break;
    }
  }
  PairSolve out{};
  if (j0 >= 0) {
    const std::size_t j = static_cast<std::size_t>(j0);
    out.den = -(u[i0] * v[j] - u[j] * v[i0]);
    out.ns = -w[i0] * v[j] + v[i0] * w[j];
    out.nt = u[i0] * w[j] - w[i0] * u[j];
    for (std::size_t i = 0; i < d; ++i) {
      if (u[i] * out.ns - v[i] * out.nt != w[i] * out.den) {
        out.kind = PairSolve::kSkewLines;
        return out;
      }
    }
    out.kind = PairSolve::kCrossing;
    return out;
  }
  // Directions parallel. Is sb's base on sa's line?
  std::size_t k = 0;
  while (u[k] == 0) ++k;
  for (std::size_t i = 0; i < d; ++i) {
    if (w[i] * u[k] != w[k] * u[i]) {
      out.kind = PairSolve::kParallelDistinct;
      return out;
    }
  }
  out.kind = PairSolve::kCollinear;
  Int num1 = w[k], num2 = w[k] + v[k], den = u[k];
  if (den < 0) {
    num1 = -num1;
    num2 = -num2;
    den = -den;
  }
  Rat sc(num1, den);
  Rat sd(num2, den);
  out.lo2 = sc < sd ? sc : sd;
  out.hi2 = sc < sd ? sd : sc;
  return out;
}

}  // namespace

int orient2d(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  if (p.dim() != 2 || q.dim() != 2 || r.dim() != 2)
    throw invalid_input("orient2d: points must be 2D");
  Rat det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
  return sign(det);
}

bool segments_disjoint(const Segment& s, const Segment& t) {
  if (s.dim() != t.dim()) throw invalid_input("segments_disjoint: dimension mismatch");
  PairSolve ps = solve_pair(s, t);
  switch (ps.kind) {
    case PairSolve::kSkewLines:
    case PairSolve::kParallelDistinct:
      return true;
    case PairSolve::kCrossing:
      return !ps.params_in_unit_box();
    case PairSolve::kCollinear:
      return ps.lo2 > 1 || ps.hi2 < 0;
  }
  return true;  // unreachable
}

std::optional<AffinePoint> segment_intersection_point(const Segment& s, const Segment& t) {
  if (s.dim() != t.dim()) throw invalid_input("segment_intersection_point: dimension mismatch");
  PairSolve ps = solve_pair(s, t);
  const std::size_t d = s.dim();
  if (ps.kind == PairSolve::kCrossing) {
    if (!ps.params_in_unit_box()) return std::nullopt;
    Rat sp = ps.den < 0 ? Rat(-ps.ns, -ps.den) : Rat(ps.ns, ps.den);
    std::vector<Rat> coords(d);
    for (std::size_t i = 0; i < d; ++i) coords[i] = s.a()[i] + sp * (s.b()[i] - s.a()[i]);
    return AffinePoint(std::move(coords));
  }
  if (ps.kind == PairSolve::kCollinear) {
    Rat lo = ps.lo2 > 0 ? ps.lo2 : Rat(0);
    Rat hi = ps.hi2 < 1 ? ps.hi2 : Rat(1);
    if (lo != hi) return std::nullopt;  // empty or a full sub-segment
    std::vector<Rat> coords(d);
    for (std::size_t i = 0; i < d; ++i) coords[i] = s.a()[i] + lo * (s.b()[i] - s.a()[i]);
    return AffinePoint(std::move(coords));
  }
  return std::nullopt;
}

Int plucker_side_form(const ProjLine& L, const ProjLine& M) {
  const auto& p = L.p();
  const auto& q = M.p();
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[5] * q[0] - p[4] * q[1] + p[3] * q[2];
}

std::pair<HomPoint, HomPoint> points_on_line(const ProjLine& L) {
  // With P = x y^T - y x^T, every column of P lies on the line span{x, y}.
  Int P[4][4] = {};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      P[i][j] = L[k];
      P[j][i] = -L[k];
      ++k;
    }
  std::array<std::array<Int, 4>, 4> col;
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) col[c][r] = P[r][c];
  auto nonzero = [](const std::array<Int, 4>& v) {
    for (const Int& x : v)
      if (x != 0) return true;
    return false;
  };
  int first = -1;
  for (std::size_t c = 0; c < 4; ++c)
    if (nonzero(col[c])) {
      first = static_cast<int>(c);
      break;
    }
  if (first < 0) throw invalid_input("points_on_line: zero Plucker tuple");
  HomPoint a(col[static_cast<std::size_t>(first)]);
  for (std::size_t c = static_cast<std::size_t>(first) + 1; c < 4; ++c) {
    if (!nonzero(col[c])) continue;
    HomPoint b(col[c]);
    if (!proportional4(a.h(), b.h())) return {a, b};
  }
  throw internal_error("points_on_line: rank-1 Plucker matrix");
}

bool point_on_line(const HomPoint& x, const ProjLine& L) {
  auto [a, b] = points_on_line(L);
  auto m = rows_from_points({&a, &b, &x});
  return rank_of(std::move(m), 4) == 2;
}

bool line_in_plane(const ProjLine& L, const HomPlane& plane) {
  auto [a, b] = points_on_line(L);
  return plane.contains(a) && plane.contains(b);
}

MeetResult proj_lines_meet(const ProjLine& L, const ProjLine& M) {
  if (L == M) return MeetEqual{};
  if (plucker_side_form(L, M) != 0) return MeetSkew{};
  auto [a, b] = points_on_line(L);
  auto [c, d] = points_on_line(M);
  std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    m[i][0] = Rat(a[i]);
    m[i][1] = Rat(b[i]);
    m[i][2] = Rat(c[i]);
    m[i][3] = Rat(d[i]);
  }
  std::vector<Rat> x = nullspace_one(std::move(m), 4);
  if (x.empty()) throw internal_error("proj_lines_meet: coplanar lines with trivial kernel");
  std::array<Rat, 4> meet;
  for (std::size_t i = 0; i < 4; ++i) meet[i] = x[0] * Rat(a[i]) + x[1] * Rat(b[i]);
  bool all_zero = true;
  for (const Rat& v : meet)
    if (v != 0) all_zero = false;
  if (all_zero) throw internal_error("proj_lines_meet: degenerate meet");
  return HomPoint(meet);
}

HomPlane plane_through(const ProjLine& L, const HomPoint& x) {
  if (point_on_line(x, L)) throw invalid_input("plane_through: point lies on the line");
  auto [a, b] = points_on_line(L);
  std::vector<Rat> c = nullspace_one(rows_from_points({&a, &b, &x}), 4);
  if (c.empty()) throw internal_error("plane_through: trivial kernel");
  return HomPlane(std::array<Rat, 4>{c[0], c[1], c[2], c[3]});
}

SpanStructure span_structure(const ProjLine& L, const ProjLine& M) {
  MeetResult meet = proj_lines_meet(L, M);
  if (!std::holds_alternative<HomPoint>(meet))
    throw invalid_input("span_structure: lines must be distinct and meeting");
  auto [c, d] = points_on_line(M);
  const HomPoint& off = point_on_line(c, L) ? d : c;
  HomPlane plane = plane_through(L, off);
  if (!line_in_plane(M, plane)) throw internal_error("span_structure: plane misses second line");
  return {std::get<HomPoint>(meet), plane};
}

bool segment_contains_point(const Segment& s, const HomPoint& x) {
  if (s.dim() != 3) throw invalid_input("segment_contains_point: need a 3D segment");
  if (x.is_ideal()) return false;
  AffinePoint p = x.to_affine();
  std::array<Rat, 3> u{s.b()[0] - s.a()[0], s.b()[1] - s.a()[1], s.b()[2] - s.a()[2]};
  std::size_t k = 0;
  while (u[k] == 0) ++k;
  Rat t = (p[k] - s.a()[k]) / u[k];
  if (t < 0 || t > 1) return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (s.a()[i] + t * u[i] != p[i]) return false;
  return true;
}

EuclLineRelation eucl_lines_relation(const EuclLine& L, const EuclLine& M) {
  if (L == M) return {LineRelation::equal, std::nullopt};
  MeetResult meet = proj_lines_meet(L.plucker(), M.plucker());
  if (std::holds_alternative<MeetSkew>(meet)) return {LineRelation::skew, std::nullopt};
  if (std::holds_alternative<MeetEqual>(meet))
    throw internal_error("eucl_lines_relation: distinct lines with equal Plucker coordinates");
  const HomPoint& p = std::get<HomPoint>(meet);
  if (p.is_ideal()) return {LineRelation::parallel, std::nullopt};
  return {LineRelation::intersecting, p.to_affine()};
}

}  // namespace djg
