#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "djg/line.hpp"
#include "djg/point.hpp"
#include "djg/segment.hpp"

namespace djg {

// Sign of det(q - p, r - p); +1 for counterclockwise. Requires d == 2.
int orient2d(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

// Closed point sets disjoint? Touching at a single point counts as NOT
// disjoint. Works for any shared dimension d >= 2.
bool segments_disjoint(const Segment& s, const Segment& t);

// The common point of two intersecting segments when it is unique.
// nullopt if the segments are disjoint or overlap in more than a point.
std::optional<AffinePoint> segment_intersection_point(const Segment& s, const Segment& t);

// Bilinear side form; zero iff the lines meet in P^3.
Int plucker_side_form(const ProjLine& L, const ProjLine& M);

struct MeetSkew {};
struct MeetEqual {};
using MeetResult = std::variant<MeetSkew, MeetEqual, HomPoint>;

// Classify a pair of projective lines; when they meet in exactly one point,
// that point is returned (possibly at infinity).
MeetResult proj_lines_meet(const ProjLine& L, const ProjLine& M);

enum class LineRelation { equal, intersecting, parallel, skew };

struct EuclLineRelation {
  LineRelation relation;
  std::optional<AffinePoint> point;  // set iff relation == intersecting
};

EuclLineRelation eucl_lines_relation(const EuclLine& L, const EuclLine& M);

struct SpanStructure {
  HomPoint point;
  HomPlane plane;
};

// For distinct meeting lines: the meet point and the unique common plane.
SpanStructure span_structure(const ProjLine& L, const ProjLine& M);

// Two projectively distinct canonical points spanning the line.
std::pair<HomPoint, HomPoint> points_on_line(const ProjLine& L);

bool point_on_line(const HomPoint& x, const ProjLine& L);
bool line_in_plane(const ProjLine& L, const HomPlane& plane);

// Does the closed segment contain the (necessarily affine) point?
bool segment_contains_point(const Segment& s, const HomPoint& x);

// Plane through a projective line and a point off it.
HomPlane plane_through(const ProjLine& L, const HomPoint& x);

}  // namespace djg
