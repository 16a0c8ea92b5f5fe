#pragma once

#include <optional>
#include <vector>

#include "djg/graph.hpp"
#include "djg/line.hpp"

namespace djg {

struct OracleColoring {
  int chi = 0;
  std::vector<int> colors;
};

// Exact chromatic number by DSATUR-style branch and bound with a clique
// lower bound. Refuses instances above the cap.
OracleColoring exact_chromatic(const DGraph& g, std::size_t cap = 40);

struct OracleSet {
  int value = 0;
  std::vector<int> members;
};

// Exact maximum clique / independent set by branch and bound with a greedy
// coloring bound.
OracleSet exact_clique(const DGraph& g, std::size_t cap = 60);
OracleSet exact_independence(const DGraph& g, std::size_t cap = 60);

// A maximal family of pairwise-meeting lines shares a point or a plane.
struct MaximalCliqueWitness {
  enum class Kind { point, plane };
  Kind kind = Kind::point;
  HomPoint point;
  HomPlane plane;
  std::vector<int> members;
};

struct OmegaLinesResult {
  std::size_t omega = 0;
  std::optional<MaximalCliqueWitness> witness;
};

// Clique number of the intersection graph of projective lines by the O(n^3)
// point/plane scan over meeting pairs. Duplicates are collapsed up front and
// counted by multiplicity.
OmegaLinesResult omega_intersection_lines(const std::vector<ProjLine>& lines);

// Cover all lines by at most k point/plane cliques, if possible. The search
// runs over the polynomially many candidate maximal cliques; k is capped.
std::optional<std::vector<MaximalCliqueWitness>> clique_cover_at_most_k(
    const std::vector<ProjLine>& lines, std::size_t k, std::size_t k_cap = 4);

}  // namespace djg
