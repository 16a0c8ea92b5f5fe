#include "djg/chordal.hpp"

#include <algorithm>

#include "djg/errors.hpp"

namespace djg {

std::vector<int> lex_bfs_order(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> done(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (best < 0 || label[v] > label[static_cast<std::size_t>(best)])
        best = static_cast<int>(v);
    }
    done[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && adj[static_cast<std::size_t>(best)][v])
        label[v].push_back(static_cast<int>(n - step));
  }
  return order;
}

std::optional<std::vector<int>> perfect_elimination_ordering(
    const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> order = lex_bfs_order(adj);
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  // order is a PEO iff for each v, the earliest later neighbor u is adjacent
  // to all other later neighbors of v.
  for (std::size_t i = 0; i < n; ++i) {
    int v = order[i];
    int u = -1;
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(order[j])]) {
        u = order[j];
        break;
      }
    if (u < 0) continue;
    for (std::size_t j = static_cast<std::size_t>(pos[static_cast<std::size_t>(u)]) + 1; j < n;
         ++j) {
      int w = order[j];
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
          !adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)])
        return std::nullopt;
    }
  }
  return order;
}

CliqueCover gavril_clique_cover(const std::vector<std::vector<bool>>& adj,
                                const std::vector<int>& peo) {
  const std::size_t n = adj.size();
  if (peo.size() != n) throw invalid_input("gavril_clique_cover: order size mismatch");
  CliqueCover out;
  out.class_of.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int v = peo[i];
    if (out.class_of[static_cast<std::size_t>(v)] >= 0) continue;
    int cls = out.num_classes++;
    out.class_of[static_cast<std::size_t>(v)] = cls;
    out.independent_set.push_back(v);
    // {v} + later neighbors of v is a clique; claim the still-unassigned ones.
    for (std::size_t j = i + 1; j < n; ++j) {
      int w = peo[j];
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
          out.class_of[static_cast<std::size_t>(w)] < 0)
        out.class_of[static_cast<std::size_t>(w)] = cls;
    }
  }
  return out;
}

}  // namespace djg
