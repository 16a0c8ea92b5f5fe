#pragma once

#include <random>
#include <vector>

#include "djg/segment.hpp"

namespace djg {

struct ShearResult {
  Rat epsilon;
  std::vector<Segment> segments;
};

// Apply (x, y) -> (x + eps*y, y) with eps chosen so no output segment is
// vertical. The identity (eps = 0) is used when the input has no verticals.
// Shearing is an affine bijection, so pairwise disjointness is untouched;
// pass verify = true to recheck that by recomputation.
ShearResult generic_shear_2d(const std::vector<Segment>& segs, std::mt19937_64& rng,
                             bool verify = false);

struct ProjectionResult {
  std::vector<std::vector<Rat>> matrix;  // 3 x d
  std::vector<Segment> segments;         // all 3D
};

// Random rational linear map R^d -> R^3, retried until the full pairwise
// disjointness matrix of the input is reproduced exactly. Identity for d = 3.
ProjectionResult generic_project_3d(const std::vector<Segment>& segs, std::mt19937_64& rng,
                                    int max_attempts = 64);

}  // namespace djg
