#pragma once

#include <utility>
#include <vector>

namespace djg {

// Bipartite multigraph; parallel edges are allowed and kept by index.
struct BipartiteGraph {
  int na = 0;
  int nb = 0;
  std::vector<std::pair<int, int>> edges;  // (a, b)
};

struct MatchingResult {
  std::vector<int> matching_edges;           // edge indices, pairwise endpoint-disjoint
  std::vector<int> match_edge_of_a;          // -1 if exposed
  std::vector<int> match_edge_of_b;
  std::vector<std::pair<bool, int>> cover;   // (is_b_side, vertex); |cover| == |matching|
};

// Maximum matching by augmenting paths plus the Konig minimum vertex cover
// from alternating reachability. Deterministic for a fixed edge order.
MatchingResult max_matching_with_cover(const BipartiteGraph& g);

}  // namespace djg
