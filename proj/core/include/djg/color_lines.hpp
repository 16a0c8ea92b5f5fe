#pragma once

#include <vector>

#include "djg/certificate.hpp"
#include "djg/line.hpp"

namespace djg {

// First-fit maximal clique of a disjointness graph (pairwise skew lines).
std::vector<int> greedy_maximal_clique(const DGraph& g);

// Cells V_c, one per clique member c, listed in clique order with c first.
// Every other vertex joins the first clique member it intersects; maximality
// guarantees one exists.
std::vector<std::vector<int>> partition_by_clique(const DGraph& g, const std::vector<int>& clique);

// Konig machinery of one cell: every line meets the center line L0, giving a
// bipartite multigraph H between meet points on L0 and planes through L0.
// Colors are the minimum vertex cover classes; the matching lines are a
// pairwise-skew clique of the cell.
struct StarDecomposition {
  int center = 0;                          // cell-local index of L0
  std::vector<HomPoint> points;            // A side of H
  std::vector<HomPlane> planes;            // B side of H
  std::vector<std::array<int, 2>> edges;   // per edge: (point id, plane id)
  std::vector<int> edge_line;              // cell-local line of each edge
  std::vector<int> matching;               // edge ids; |matching| == #colors unless the cell is a singleton
  std::vector<std::pair<bool, int>> cover; // Konig cover, one color per vertex
  std::vector<int> color_of;               // per cell-local line
  std::vector<ClassWitness> class_witnesses;
  std::vector<int> clique;                 // cell-local, pairwise disjoint lines
};

StarDecomposition star_decompose(const std::vector<ProjLine>& cell, int center);

// Projective coloring: at most |K|^2 colors, every class a star
// (common point) or coplanar family, K the larger of the greedy clique and
// the best per-cell matching clique.
Certificate color_projective_lines(const std::vector<ProjLine>& lines);

struct Bundles {
  std::vector<std::vector<int>> groups;  // by canonical direction, discovery order
  std::vector<int> group_of;
  std::size_t max_size = 0;
};

Bundles parallel_bundles(const std::vector<EuclLine>& lines);

// Euclidean coloring: projective coloring refined inside each class by
// parallel-bundle slot; at most |K|^3 colors with K the larger of the
// projective clique and the biggest bundle.
Certificate color_euclidean_lines(const std::vector<EuclLine>& lines);

}  // namespace djg
