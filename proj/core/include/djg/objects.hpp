#pragma once

#include <string>
#include <variant>
#include <vector>

#include "djg/line.hpp"
#include "djg/point.hpp"
#include "djg/segment.hpp"

namespace djg {

// 2D line y = slope*x + intercept with one point removed.
class PuncturedLine {
 public:
  PuncturedLine(Rat slope, Rat intercept, AffinePoint hole);

  const Rat& slope() const { return slope_; }
  const Rat& intercept() const { return intercept_; }
  const AffinePoint& hole() const { return hole_; }

  bool operator==(const PuncturedLine&) const = default;

 private:
  Rat slope_, intercept_;
  AffinePoint hole_;
};

// Connected simple path of 2..4 segments; consecutive segments share exactly
// one endpoint, non-consecutive segments are disjoint.
class Polyline {
 public:
  explicit Polyline(std::vector<AffinePoint> points);

  const std::vector<AffinePoint>& points() const { return points_; }
  const std::vector<Segment>& segments() const { return segments_; }

  bool operator==(const Polyline& o) const { return points_ == o.points_; }

 private:
  std::vector<AffinePoint> points_;
  std::vector<Segment> segments_;
};

// Two collinear disjoint segments in the plane.
class TwoSegments {
 public:
  TwoSegments(Segment first, Segment second);

  const Segment& first() const { return first_; }
  const Segment& second() const { return second_; }

  bool operator==(const TwoSegments&) const = default;

 private:
  Segment first_, second_;
};

using GeomObject = std::variant<Segment, EuclLine, ProjLine, PuncturedLine, Polyline, TwoSegments>;

enum class ObjectKind { segments, eucl_lines, proj_lines, punctured_lines, polylines, two_segments };

enum class Space { euclidean, projective };
enum class Mode { disjointness, intersection };

ObjectKind kind_of(const GeomObject& o);
std::string to_string(ObjectKind k);
std::string to_string(Space s);
std::string to_string(Mode m);

// Exact emptiness test of the pairwise intersection, in the declared space.
// Both objects must have the same kind.
bool objects_intersect(const GeomObject& a, const GeomObject& b, Space space);

}  // namespace djg
