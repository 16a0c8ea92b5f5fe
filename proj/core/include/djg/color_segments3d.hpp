#pragma once

#include <random>
#include <utility>
#include <vector>

#include "djg/certificate.hpp"
#include "djg/segment.hpp"

namespace djg {

// Segments lying in a union of listed planes: per-plane recursion with
// leftover segments colored by piercing points. Bound (p-1)|K| + |K|^4 with
// p the number of planes and K the union of the per-plane chains.
Certificate color_segments_kplanes(const std::vector<Segment>& segs,
                                   const std::vector<HomPlane>& planes, std::mt19937_64& rng);
Certificate color_segments_kplanes(const std::vector<Segment>& segs,
                                   const std::vector<HomPlane>& planes);

// Split of a projective line certificate into planar classes (with their
// witness planes, deduplicated) and pointed classes (merged by apex; ideal
// apexes are parallel pencils).
struct ClassifiedClasses {
  std::vector<HomPlane> planes;
  std::vector<int> planar_members;                            // vertex ids of planar classes
  std::vector<std::pair<HomPoint, std::vector<int>>> pointed; // apex -> vertex ids
};
ClassifiedClasses classify_color_classes(const Certificate& proj_cert);

// Optimal coloring of segments whose supporting lines share an apex: the
// intersection graph is chordal, so Gavril's greedy on a perfect elimination
// ordering gives a minimum clique cover; each cover class shares a point.
struct PointedClassResult {
  std::vector<int> colors;  // dense local ids
  std::vector<ClassWitness> witnesses;
  std::vector<int> independent_set;  // pairwise disjoint segments, maximum
};
PointedClassResult color_pointed_class(const std::vector<Segment>& segs, const HomPoint& apex);

// Full 3D pipeline: color supporting lines projectively, route planar classes
// through the k-plane recursion and pointed classes through the chordal
// cover; #colors <= |K|^4 + |K|^3.
Certificate color_segments_3d(const std::vector<Segment>& segs, std::mt19937_64& rng);
Certificate color_segments_3d(const std::vector<Segment>& segs);

}  // namespace djg
