#include "djg/line.hpp"

#include "djg/errors.hpp"

namespace djg {

namespace {

void check_grassmann_plucker(const std::array<Int, 6>& p) {
  // p = (p01,p02,p03,p12,p13,p23)
  if (p[0] * p[5] - p[1] * p[4] + p[2] * p[3] != 0)
    throw invalid_input("ProjLine: Grassmann-Plucker relation violated");
}

std::array<Int, 6> reduce6(std::array<Int, 6> v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) throw invalid_input("ProjLine: zero tuple");
  for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x != 0) {
      if (x < 0)
        for (Int& y : v) y = -y;
      break;
    }
  }
  return v;
}

}  // namespace

ProjLine::ProjLine(const std::array<Rat, 6>& p) {
  Int l = 1;
  for (const Rat& x : p) l = boost::multiprecision::lcm(l, rat_den(x));
  std::array<Int, 6> v;
  for (std::size_t i = 0; i < 6; ++i) v[i] = rat_num(p[i]) * (l / rat_den(p[i]));
  p_ = reduce6(v);
  check_grassmann_plucker(p_);
}

ProjLine::ProjLine(const std::array<Int, 6>& p) : p_(reduce6(p)) {
  check_grassmann_plucker(p_);
}

ProjLine plucker_from_points(const HomPoint& x, const HomPoint& y) {
  std::array<Int, 6> p;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) p[k++] = x[i] * y[j] - x[j] * y[i];
  bool all_zero = true;
  for (const Int& v : p)
    if (v != 0) all_zero = false;
  if (all_zero) throw invalid_input("plucker_from_points: points are projectively equal");
  return ProjLine(p);
}

EuclLine EuclLine::through(const AffinePoint& a, const AffinePoint& b) {
  if (a.dim() != 3 || b.dim() != 3) throw invalid_input("EuclLine: need 3D points");
  if (a == b) throw invalid_input("EuclLine: points coincide");
  return from_base_dir(a, {b[0] - a[0], b[1] - a[1], b[2] - a[2]});
}

EuclLine EuclLine::from_base_dir(const AffinePoint& base, const std::array<Rat, 3>& dir) {
  if (base.dim() != 3) throw invalid_input("EuclLine: need a 3D base point");
  EuclLine line;
  line.dir_ = canonicalize3(dir);
  std::size_t pivot = 0;
  while (line.dir_[pivot] == 0) ++pivot;
  // Slide the base along the line until coordinate `pivot` vanishes.
  Rat t = -base[pivot] / Rat(line.dir_[pivot]);
  line.base_ = AffinePoint(base[0] + t * Rat(line.dir_[0]), base[1] + t * Rat(line.dir_[1]),
                           base[2] + t * Rat(line.dir_[2]));
  line.plucker_ =
      plucker_from_points(HomPoint::from_affine(line.base_), HomPoint::at_infinity(line.dir_));
  return line;
}

EuclLine supporting_line(const Segment& s) {
  if (s.dim() != 3) throw invalid_input("supporting_line: need a 3D segment");
  return EuclLine::through(s.a(), s.b());
}

}  // namespace djg
