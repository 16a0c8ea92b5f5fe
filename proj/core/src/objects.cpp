#include "djg/objects.hpp"

#include "djg/errors.hpp"
#include "djg/predicates.hpp"

namespace djg {

PuncturedLine::PuncturedLine(Rat slope, Rat intercept, AffinePoint hole)
    : slope_(std::move(slope)), intercept_(std::move(intercept)), hole_(std::move(hole)) {
  if (hole_.dim() != 2) throw invalid_input("PuncturedLine: hole must be 2D");
  if (hole_[1] != slope_ * hole_[0] + intercept_)
    throw invalid_input("PuncturedLine: hole does not lie on the line");
}

Polyline::Polyline(std::vector<AffinePoint> points) : points_(std::move(points)) {
  if (points_.size() < 3 || points_.size() > 5)
    throw invalid_input("Polyline: need 2 to 4 segments");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    segments_.emplace_back(points_[i], points_[i + 1]);
  // Consecutive segments must meet exactly at the shared vertex: reject a
  // collinear fold-back, which would overlap in a whole sub-segment.
  const std::size_t d = points_[0].dim();
  for (std::size_t i = 0; i + 2 < points_.size(); ++i) {
    const AffinePoint& p = points_[i];
    const AffinePoint& q = points_[i + 1];
    const AffinePoint& r = points_[i + 2];
    bool collinear = true;
    for (std::size_t x = 0; x < d && collinear; ++x)
      for (std::size_t y = x + 1; y < d; ++y) {
        Rat ux = q[x] - p[x], uy = q[y] - p[y];
        Rat vx = r[x] - q[x], vy = r[y] - q[y];
        if (ux * vy - uy * vx != 0) {
          collinear = false;
          break;
        }
      }
    if (collinear) {
      std::size_t k = 0;
      while (q[k] == p[k]) ++k;
      Rat lambda = (r[k] - q[k]) / (q[k] - p[k]);
      if (lambda < 0) throw invalid_input("Polyline: path folds back onto itself");
    }
  }
  for (std::size_t i = 0; i < segments_.size(); ++i)
    for (std::size_t j = i + 2; j < segments_.size(); ++j)
      if (!segments_disjoint(segments_[i], segments_[j]))
        throw invalid_input("Polyline: path is self-intersecting");
}

TwoSegments::TwoSegments(Segment first, Segment second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.dim() != 2 || second_.dim() != 2)
    throw invalid_input("TwoSegments: segments must be 2D");
  const AffinePoint& a = first_.a();
  const AffinePoint& b = first_.b();
  if (orient2d(a, b, second_.a()) != 0 || orient2d(a, b, second_.b()) != 0)
    throw invalid_input("TwoSegments: segments are not collinear");
  if (!segments_disjoint(first_, second_))
    throw invalid_input("TwoSegments: segments must be disjoint");
}

ObjectKind kind_of(const GeomObject& o) {
  switch (o.index()) {
    case 0: return ObjectKind::segments;
    case 1: return ObjectKind::eucl_lines;
    case 2: return ObjectKind::proj_lines;
    case 3: return ObjectKind::punctured_lines;
    case 4: return ObjectKind::polylines;
    default: return ObjectKind::two_segments;
  }
}

std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::segments: return "segments";
    case ObjectKind::eucl_lines: return "eucl-lines";
    case ObjectKind::proj_lines: return "proj-lines";
    case ObjectKind::punctured_lines: return "punctured-lines";
    case ObjectKind::polylines: return "polylines";
    case ObjectKind::two_segments: return "two-segments";
  }
  return "?";
}

std::string to_string(Space s) { return s == Space::euclidean ? "euclidean" : "projective"; }

std::string to_string(Mode m) { return m == Mode::disjointness ? "disjointness" : "intersection"; }

namespace {

bool punctured_intersect(const PuncturedLine& a, const PuncturedLine& b) {
  if (a.slope() == b.slope()) {
    // Same carrier minus at most two points is still infinite.
    return a.intercept() == b.intercept();
  }
  Rat x = (b.intercept() - a.intercept()) / (a.slope() - b.slope());
  Rat y = a.slope() * x + a.intercept();
  AffinePoint cross(x, y);
  return cross != a.hole() && cross != b.hole();
}

bool eucl_lines_intersect(const EuclLine& a, const EuclLine& b, Space space) {
  if (space == Space::projective) {
    return a.plucker() == b.plucker() || plucker_side_form(a.plucker(), b.plucker()) == 0;
  }
  LineRelation r = eucl_lines_relation(a, b).relation;
  return r == LineRelation::equal || r == LineRelation::intersecting;
}

bool segment_lists_intersect(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  for (const Segment& s : a)
    for (const Segment& t : b)
      if (!segments_disjoint(s, t)) return true;
  return false;
}

}  // namespace

bool objects_intersect(const GeomObject& a, const GeomObject& b, Space space) {
  if (kind_of(a) != kind_of(b)) throw invalid_input("objects_intersect: mixed object kinds");
  switch (kind_of(a)) {
    case ObjectKind::segments:
      return !segments_disjoint(std::get<Segment>(a), std::get<Segment>(b));
    case ObjectKind::eucl_lines:
      return eucl_lines_intersect(std::get<EuclLine>(a), std::get<EuclLine>(b), space);
    case ObjectKind::proj_lines: {
      const ProjLine& L = std::get<ProjLine>(a);
      const ProjLine& M = std::get<ProjLine>(b);
      return L == M || plucker_side_form(L, M) == 0;
    }
    case ObjectKind::punctured_lines:
      return punctured_intersect(std::get<PuncturedLine>(a), std::get<PuncturedLine>(b));
    case ObjectKind::polylines:
      return segment_lists_intersect(std::get<Polyline>(a).segments(),
                                     std::get<Polyline>(b).segments());
    case ObjectKind::two_segments: {
      const TwoSegments& s = std::get<TwoSegments>(a);
      const TwoSegments& t = std::get<TwoSegments>(b);
      return segment_lists_intersect({s.first(), s.second()}, {t.first(), t.second()});
    }
  }
  return false;
}

}  // namespace djg
