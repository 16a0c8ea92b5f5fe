#pragma once

#include <cstddef>
#include <vector>

#include "djg/objects.hpp"

namespace djg {

// Disjointness (or intersection) graph over homogeneous geometric objects.
// Dense symmetric irreflexive adjacency.
class DGraph {
 public:
  DGraph() = default;
  DGraph(std::vector<GeomObject> objects, Mode mode, Space space,
         std::vector<std::vector<bool>> adj)
      : objects_(std::move(objects)), mode_(mode), space_(space), adj_(std::move(adj)) {}

  std::size_t size() const { return objects_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j]; }
  const std::vector<GeomObject>& objects() const { return objects_; }
  Mode mode() const { return mode_; }
  Space space() const { return space_; }
  const std::vector<std::vector<bool>>& adj() const { return adj_; }

  std::size_t degree(std::size_t v) const;

 private:
  std::vector<GeomObject> objects_;
  Mode mode_ = Mode::disjointness;
  Space space_ = Space::euclidean;
  std::vector<std::vector<bool>> adj_;
};

// O(n^2) exact pair predicates. Rejects mixed kinds; the projective space is
// valid only for line kinds, and ProjLine objects require it.
DGraph build_graph(std::vector<GeomObject> objects, Mode mode, Space space);

// Brute-force O(n^3) scan.
bool is_triangle_free(const DGraph& g);

}  // namespace djg
