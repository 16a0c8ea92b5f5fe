#pragma once

#include <optional>
#include <vector>

namespace djg {

// Lex-BFS visit order of an undirected graph given as a dense adjacency
// matrix. Deterministic: ties break toward the smallest vertex id.
std::vector<int> lex_bfs_order(const std::vector<std::vector<bool>>& adj);

// Reverse Lex-BFS order if the graph is chordal, nullopt otherwise.
// The returned order is a perfect elimination ordering: every vertex's
// later neighbors form a clique.
std::optional<std::vector<int>> perfect_elimination_ordering(
    const std::vector<std::vector<bool>>& adj);

struct CliqueCover {
  std::vector<int> class_of;         // cover class per vertex
  int num_classes = 0;
  std::vector<int> independent_set;  // maximum; |IS| == num_classes
};

// Gavril's greedy along a PEO: minimum clique cover and maximum independent
// set of a chordal graph, with matching sizes.
CliqueCover gavril_clique_cover(const std::vector<std::vector<bool>>& adj,
                                const std::vector<int>& peo);

}  // namespace djg
