#pragma once

#include <random>
#include <utility>
#include <vector>

#include "djg/objects.hpp"

namespace djg {

// Shift graph H_m: vertices are ordered pairs (i,j), 1 <= i < j <= m in
// lexicographic order; (i,j) ~ (k,l) iff j == k or l == i. Triangle-free
// with chromatic number ceil(log2 m).
struct ShiftGraph {
  int m = 0;
  std::vector<std::pair<int, int>> vertices;
  std::vector<std::vector<bool>> adj;

  bool adjacent(std::size_t a, std::size_t b) const { return adj[a][b]; }
};

ShiftGraph shift_graph_abstract(int m);

// Realization by punctured lines: carrier L_i is y = i*x + i^2 and the pair
// (i,j) becomes L_i minus the crossing point L_i ^ L_j. The disjointness
// graph equals H_m edge-for-edge under the canonical labeling (verified).
std::vector<PuncturedLine> gen_shift_pointed_lines(int m);

// Bounded version: each punctured line truncated to x in [-3m, m] and split
// around its hole with an open gap of radius 1/2 in x (verified).
std::vector<TwoSegments> gen_shift_two_segments(int m);

// Realization by 4-segment polylines t_(ij) p_j q_j r_j s_j around nested
// isosceles triangles with apexes on a rightward-opening arc. Parameters are
// shrunk geometrically until the built graph equals H_m exactly.
std::vector<Polyline> gen_shift_polyline(int m);

// The geometry behind gen_shift_polyline, exposed for inspection.
struct ShiftPolylineLayout {
  Rat delta;
  std::vector<AffinePoint> apex, q, r, s;  // per i = 1..m (0-indexed)
  std::vector<Polyline> polylines;         // per (i,j) lexicographic
};
ShiftPolylineLayout gen_shift_polyline_layout(int m);

// All lines through pairs of 2k+1 moment-curve points; the disjointness
// graph is the Kneser graph of 2-subsets (verified), so omega = k and
// chi = 2k-1.
std::vector<EuclLine> gen_kneser_lines(int k);

// One geometric line per combinatorial line of {1..m}^d, projected to R^3
// through a verified generic map when d > 3. Count: (m+1)^d - m^d.
std::vector<EuclLine> gen_hales_jewett_lines(int m, int d, std::mt19937_64& rng);

// Moment-curve embedding of the line graph: vertices of the abstract graph
// go to curve points, edges to connecting lines; the intersection graph of
// the lines is the line graph of the input (verified).
std::vector<EuclLine> gen_linegraph_lines(int num_vertices,
                                          const std::vector<std::pair<int, int>>& edges);

}  // namespace djg
