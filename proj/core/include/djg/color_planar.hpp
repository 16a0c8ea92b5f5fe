#pragma once

#include <random>
#include <vector>

#include "djg/certificate.hpp"
#include "djg/segment.hpp"

namespace djg {

// Bitmask of order relations between two nonvertical 2D segments:
// bit 2*o     set  <=>  s precedes t in order o,
// bit 2*o + 1 set  <=>  t precedes s in order o.
using OrderMask = unsigned;

inline bool precedes(OrderMask m, OrderId o) { return m & (1u << (2 * static_cast<unsigned>(o))); }
inline bool succeeds(OrderMask m, OrderId o) {
  return m & (1u << (2 * static_cast<unsigned>(o) + 1));
}

// Every relation s <_o t or t <_o s that holds. Throws on vertical segments.
//
// With X(s) = [l_s, r_s] the x-projection and s(x) the linear function whose
// graph the segment is:
//   s <_NestBelow t  <=>  disjoint, X(t) subset of X(s), t above s on X(t)
//   s <_NestAbove t  <=>  disjoint, X(t) subset of X(s), t below s on X(t)
//   s <_StagBelow t  <=>  disjoint, l_s < l_t, r_s < r_t, and
//                         (r_s < l_t or s below t on [l_t, r_s])
//   s <_StagAbove t  <=>  same with s above t on the overlap
OrderMask order_compare(const Segment& s, const Segment& t);

struct MirskyResult {
  std::vector<int> heights;        // longest chain ending at each vertex
  std::vector<int> longest_chain;  // realizes the maximum height, in order
};

// Heights of the comparability DAG of one order. Fails hard if the relation
// is cyclic, which would falsify antisymmetry or transitivity.
MirskyResult mirsky_decompose(const std::vector<Segment>& segs, OrderId ord);

// Constructive planar bound: color = 4-tuple of Mirsky heights (compacted),
// clique = the longest chain over the four orders; #colors <= |K|^4.
Certificate color_planar_segments(const std::vector<Segment>& segs, std::mt19937_64& rng);
Certificate color_planar_segments(const std::vector<Segment>& segs);

}  // namespace djg
