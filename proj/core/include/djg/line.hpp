#pragma once

#include <array>
#include <compare>

#include "djg/point.hpp"
#include "djg/segment.hpp"

namespace djg {

// Line of P^3 as a canonical Plucker 6-tuple (p01,p02,p03,p12,p13,p23)
// satisfying p01*p23 - p02*p13 + p03*p12 == 0 exactly.
class ProjLine {
 public:
  ProjLine() : p_{0, 0, 0, 0, 0, 0} {}
  explicit ProjLine(const std::array<Rat, 6>& p);
  explicit ProjLine(const std::array<Int, 6>& p);

  const std::array<Int, 6>& p() const { return p_; }
  const Int& operator[](std::size_t i) const { return p_[i]; }

  bool operator==(const ProjLine&) const = default;
  std::weak_ordering operator<=>(const ProjLine&) const = default;

 private:
  std::array<Int, 6> p_;
};

// Affine line of R^3 in canonical form: dir has coprime integer entries with
// the first nonzero positive; base is the point of the line whose coordinate
// at dir's pivot index is zero. Equal point sets get identical representations.
class EuclLine {
 public:
  EuclLine() = default;
  static EuclLine through(const AffinePoint& a, const AffinePoint& b);
  static EuclLine from_base_dir(const AffinePoint& base, const std::array<Rat, 3>& dir);

  const AffinePoint& base() const { return base_; }
  const std::array<Int, 3>& dir() const { return dir_; }
  const ProjLine& plucker() const { return plucker_; }
  HomPoint ideal_point() const { return HomPoint::at_infinity(dir_); }

  bool operator==(const EuclLine& o) const { return base_ == o.base_ && dir_ == o.dir_; }

 private:
  AffinePoint base_;
  std::array<Int, 3> dir_{0, 0, 0};
  ProjLine plucker_;
};

// Plucker coordinates of the line through two projectively distinct points.
ProjLine plucker_from_points(const HomPoint& x, const HomPoint& y);

// Canonical supporting line of a 3D segment.
EuclLine supporting_line(const Segment& s);

}  // namespace djg
