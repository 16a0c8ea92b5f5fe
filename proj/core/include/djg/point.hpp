#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "djg/rational.hpp"

namespace djg {

// Point of R^d, d >= 2. All points of one dataset share d.
class AffinePoint {
 public:
  AffinePoint() = default;
  explicit AffinePoint(std::vector<Rat> coords);
  AffinePoint(Rat x, Rat y);
  AffinePoint(Rat x, Rat y, Rat z);

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool operator==(const AffinePoint&) const = default;

 private:
  std::vector<Rat> coords_;
};

// Canonical homogeneous 4-tuple: coprime integers, first nonzero positive.
// Coordinate 0 is the homogenizing one; h0 == 0 marks a point at infinity.
class HomPoint {
 public:
  HomPoint() : h_{0, 0, 0, 0} {}
  explicit HomPoint(const std::array<Rat, 4>& h);
  explicit HomPoint(const std::array<Int, 4>& h);

  static HomPoint from_affine(const AffinePoint& p);   // d == 3
  static HomPoint at_infinity(const std::array<Int, 3>& dir);

  const std::array<Int, 4>& h() const { return h_; }
  const Int& operator[](std::size_t i) const { return h_[i]; }
  bool is_ideal() const { return h_[0] == 0; }
  AffinePoint to_affine() const;  // requires !is_ideal()

  bool operator==(const HomPoint&) const = default;
  std::weak_ordering operator<=>(const HomPoint&) const = default;

 private:
  std::array<Int, 4> h_;
};

// Plane of P^3 with the same canonical form; incidence is <c, x> == 0.
class HomPlane {
 public:
  HomPlane() : c_{0, 0, 0, 0} {}
  explicit HomPlane(const std::array<Rat, 4>& c);
  explicit HomPlane(const std::array<Int, 4>& c);

  const std::array<Int, 4>& c() const { return c_; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  bool contains(const HomPoint& x) const;

  bool operator==(const HomPlane&) const = default;
  std::weak_ordering operator<=>(const HomPlane&) const = default;

 private:
  std::array<Int, 4> c_;
};

// Scale a rational 4-tuple to coprime integers with the sign rule.
// Throws invalid_input if the tuple is all zero.
std::array<Int, 4> canonicalize4(const std::array<Rat, 4>& v);
std::array<Int, 4> canonicalize4(std::array<Int, 4> v);
std::array<Int, 3> canonicalize3(const std::array<Rat, 3>& v);
std::array<Int, 3> canonicalize3(std::array<Int, 3> v);

}  // namespace djg
