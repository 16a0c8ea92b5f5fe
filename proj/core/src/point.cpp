#include "djg/point.hpp"

#include <boost/multiprecision/integer.hpp>

#include "djg/errors.hpp"

namespace djg {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

template <std::size_t N>
std::array<Int, N> clear_denominators(const std::array<Rat, N>& v) {
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, rat_den(x));
  std::array<Int, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = rat_num(v[i]) * (l / rat_den(v[i]));
  return out;
}

template <std::size_t N>
std::array<Int, N> reduce_and_sign(std::array<Int, N> v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw invalid_input("canonicalize: zero tuple");
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

AffinePoint::AffinePoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw invalid_input("AffinePoint: dimension must be >= 2");
}

AffinePoint::AffinePoint(Rat x, Rat y) : coords_{std::move(x), std::move(y)} {}

AffinePoint::AffinePoint(Rat x, Rat y, Rat z)
    : coords_{std::move(x), std::move(y), std::move(z)} {}

std::array<Int, 4> canonicalize4(const std::array<Rat, 4>& v) {
  return reduce_and_sign(clear_denominators(v));
}

std::array<Int, 4> canonicalize4(std::array<Int, 4> v) { return reduce_and_sign(std::move(v)); }

std::array<Int, 3> canonicalize3(const std::array<Rat, 3>& v) {
  return reduce_and_sign(clear_denominators(v));
}

std::array<Int, 3> canonicalize3(std::array<Int, 3> v) { return reduce_and_sign(std::move(v)); }

HomPoint::HomPoint(const std::array<Rat, 4>& h) : h_(canonicalize4(h)) {}

HomPoint::HomPoint(const std::array<Int, 4>& h) : h_(canonicalize4(h)) {}

HomPoint HomPoint::from_affine(const AffinePoint& p) {
  if (p.dim() != 3) throw invalid_input("HomPoint::from_affine: need a 3D point");
  return HomPoint(std::array<Rat, 4>{Rat(1), p[0], p[1], p[2]});
}

HomPoint HomPoint::at_infinity(const std::array<Int, 3>& dir) {
  return HomPoint(std::array<Int, 4>{Int(0), dir[0], dir[1], dir[2]});
}

AffinePoint HomPoint::to_affine() const {
  if (is_ideal()) throw invalid_input("HomPoint::to_affine: point at infinity");
  return AffinePoint(Rat(h_[1], h_[0]), Rat(h_[2], h_[0]), Rat(h_[3], h_[0]));
}

HomPlane::HomPlane(const std::array<Rat, 4>& c) : c_(canonicalize4(c)) {}

HomPlane::HomPlane(const std::array<Int, 4>& c) : c_(canonicalize4(c)) {}

bool HomPlane::contains(const HomPoint& x) const {
  Int dot = 0;
  for (std::size_t i = 0; i < 4; ++i) dot += c_[i] * x[i];
  return dot == 0;
}

}  // namespace djg
