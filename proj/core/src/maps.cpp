#include "djg/maps.hpp"

#include "djg/errors.hpp"
#include "djg/predicates.hpp"

namespace djg {

namespace {

std::vector<std::vector<bool>> disjointness_matrix(const std::vector<Segment>& segs) {
  const std::size_t n = segs.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = segments_disjoint(segs[i], segs[j]);
  return m;
}

}  // namespace

ShearResult generic_shear_2d(const std::vector<Segment>& segs, std::mt19937_64& rng, bool verify) {
  for (const Segment& s : segs)
    if (s.dim() != 2) throw invalid_input("generic_shear_2d: segments must be 2D");

  bool has_vertical = false;
  for (const Segment& s : segs)
    if (s.a()[0] == s.b()[0]) has_vertical = true;

  Rat eps(0);
  if (has_vertical) {
    for (;;) {
      Int num = Int(1 + rng() % 16);
      Int den = Int(1 + rng() % 16);
      if (rng() % 2) num = -num;
      Rat candidate(num, den);
      bool ok = true;
      for (const Segment& s : segs) {
        Rat dx = s.b()[0] - s.a()[0];
        Rat dy = s.b()[1] - s.a()[1];
        if (dx + candidate * dy == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        eps = candidate;
        break;
      }
    }
  }

  std::vector<Segment> out;
  out.reserve(segs.size());
  for (const Segment& s : segs) {
    AffinePoint a(s.a()[0] + eps * s.a()[1], s.a()[1]);
    AffinePoint b(s.b()[0] + eps * s.b()[1], s.b()[1]);
    out.emplace_back(a, b);
  }
  if (verify && disjointness_matrix(segs) != disjointness_matrix(out))
    throw internal_error("generic_shear_2d: disjointness matrix changed");
  return {eps, std::move(out)};
}

ProjectionResult generic_project_3d(const std::vector<Segment>& segs, std::mt19937_64& rng,
                                    int max_attempts) {
  if (segs.empty()) return {{}, {}};
  const std::size_t d = segs[0].dim();
  for (const Segment& s : segs)
    if (s.dim() != d) throw invalid_input("generic_project_3d: mixed dimensions");
  if (d < 3) throw invalid_input("generic_project_3d: dimension must be >= 3");

  if (d == 3) {
    std::vector<std::vector<Rat>> id(3, std::vector<Rat>(3, Rat(0)));
    for (std::size_t i = 0; i < 3; ++i) id[i][i] = 1;
    return {id, segs};
  }

  auto original = disjointness_matrix(segs);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(d));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m[i][j] = Rat(Int(rng() % 41) - 20);
    auto apply = [&](const AffinePoint& p) {
      std::vector<Rat> y(3, Rat(0));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < d; ++j) y[i] += m[i][j] * p[j];
      return AffinePoint(std::move(y));
    };
    std::vector<Segment> out;
    out.reserve(segs.size());
    bool degenerate = false;
    for (const Segment& s : segs) {
      AffinePoint a = apply(s.a());
      AffinePoint b = apply(s.b());
      if (a == b) {
        degenerate = true;
        break;
      }
      out.emplace_back(a, b);
    }
    if (degenerate) continue;
    if (disjointness_matrix(out) == original) return {std::move(m), std::move(out)};
  }
  throw invalid_input("generic_project_3d: attempt cap exhausted");
}

}  // namespace djg
