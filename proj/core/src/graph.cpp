#include "djg/graph.hpp"

#include "djg/errors.hpp"

namespace djg {

std::size_t DGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < size(); ++u)
    if (adj_[v][u]) ++d;
  return d;
}

DGraph build_graph(std::vector<GeomObject> objects, Mode mode, Space space) {
  const std::size_t n = objects.size();
  if (n > 0) {
    ObjectKind kind = kind_of(objects[0]);
    for (const GeomObject& o : objects)
      if (kind_of(o) != kind) throw invalid_input("build_graph: mixed object kinds");
    const bool line_kind = kind == ObjectKind::eucl_lines || kind == ObjectKind::proj_lines;
    if (space == Space::projective && !line_kind)
      throw invalid_input("build_graph: projective space is only valid for line kinds");
    if (kind == ObjectKind::proj_lines && space != Space::projective)
      throw invalid_input("build_graph: projective lines have no euclidean structure");
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool meet = objects_intersect(objects[i], objects[j], space);
      bool edge = mode == Mode::disjointness ? !meet : meet;
      adj[i][j] = adj[j][i] = edge;
    }
  }
  return DGraph(std::move(objects), mode, space, std::move(adj));
}

bool is_triangle_free(const DGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (g.adjacent(i, k) && g.adjacent(j, k)) return false;
    }
  return true;
}

}  // namespace djg
