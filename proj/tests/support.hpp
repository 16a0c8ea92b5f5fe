#pragma once

#include <random>
#include <string>
#include <vector>

#include "djg/objects.hpp"
#include "djg/segment.hpp"

namespace djg::test {

inline Rat Q(const std::string& s) {
  auto r = rat_from_string(s);
  REQUIRE(r.has_value());
  return *r;
}

inline AffinePoint P2(const std::string& x, const std::string& y) { return {Q(x), Q(y)}; }
inline AffinePoint P2(long long x, long long y) { return {Rat(x), Rat(y)}; }
inline AffinePoint P3(long long x, long long y, long long z) { return {Rat(x), Rat(y), Rat(z)}; }

inline Segment S2(long long ax, long long ay, long long bx, long long by) {
  return {P2(ax, ay), P2(bx, by)};
}
inline Segment S3(long long ax, long long ay, long long az, long long bx, long long by,
                  long long bz) {
  return {P3(ax, ay, az), P3(bx, by, bz)};
}

inline Rat random_rat(std::mt19937_64& rng, int num_range = 40, int den_range = 8) {
  long long num = static_cast<long long>(rng() % (2 * num_range + 1)) - num_range;
  long long den = 1 + static_cast<long long>(rng() % den_range);
  return Rat(num, den);
}

inline AffinePoint random_point(std::mt19937_64& rng, std::size_t dim, int range = 40) {
  std::vector<Rat> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(random_rat(rng, range));
  return AffinePoint(c);
}

inline Segment random_segment(std::mt19937_64& rng, std::size_t dim, int range = 40) {
  for (;;) {
    AffinePoint a = random_point(rng, dim, range);
    AffinePoint b = random_point(rng, dim, range);
    if (!(a == b)) return {a, b};
  }
}

inline std::vector<Segment> random_segments(std::mt19937_64& rng, std::size_t n, std::size_t dim,
                                            int range = 40) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_segment(rng, dim, range));
  return out;
}

// Mix of coplanar clusters, concurrent pencils and generic 3D segments.
inline std::vector<Segment> random_3d_mix(std::mt19937_64& rng, std::size_t n) {
  std::vector<Segment> out;
  while (out.size() < n) {
    switch (rng() % 3) {
      case 0: {  // coplanar cluster in the tilted plane z = px + qy + c
        Rat p = random_rat(rng, 3), q = random_rat(rng, 3);
        Rat c(static_cast<long long>(rng() % 7));
        auto lift = [&](const AffinePoint& uv) {
          return AffinePoint(uv[0], uv[1], p * uv[0] + q * uv[1] + c);
        };
        for (int i = 0; i < 4 && out.size() < n; ++i) {
          AffinePoint a = random_point(rng, 2, 10);
          AffinePoint b = random_point(rng, 2, 10);
          if (a == b) continue;
          out.push_back(Segment(lift(a), lift(b)));
        }
        break;
      }
      case 1: {  // pencil through a random apex
        AffinePoint apex = random_point(rng, 3, 8);
        for (int i = 0; i < 3 && out.size() < n; ++i) {
          AffinePoint d = random_point(rng, 3, 4);
          if (d[0] == 0 && d[1] == 0 && d[2] == 0) continue;
          Rat lo = random_rat(rng, 3), hi = lo + Rat(1 + static_cast<long long>(rng() % 3));
          AffinePoint a(apex[0] + lo * d[0], apex[1] + lo * d[1], apex[2] + lo * d[2]);
          AffinePoint b(apex[0] + hi * d[0], apex[1] + hi * d[1], apex[2] + hi * d[2]);
          if (a == b) continue;
          out.push_back(Segment(a, b));
        }
        break;
      }
      default:
        out.push_back(random_segment(rng, 3, 12));
    }
  }
  out.resize(n);
  return out;
}

}  // namespace djg::test
