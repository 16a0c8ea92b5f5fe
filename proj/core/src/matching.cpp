#include "djg/matching.hpp"

#include "djg/errors.hpp"

namespace djg {

namespace {

struct Kuhn {
  const BipartiteGraph& g;
  std::vector<std::vector<int>> adj;  // a -> edge indices
  std::vector<int> match_a, match_b;  // edge index or -1
  std::vector<bool> visited_b;

  explicit Kuhn(const BipartiteGraph& graph)
      : g(graph),
        adj(static_cast<std::size_t>(graph.na)),
        match_a(static_cast<std::size_t>(graph.na), -1),
        match_b(static_cast<std::size_t>(graph.nb), -1),
        visited_b(static_cast<std::size_t>(graph.nb), false) {
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      adj[static_cast<std::size_t>(g.edges[e].first)].push_back(static_cast<int>(e));
  }

  bool augment(int a) {
    for (int e : adj[static_cast<std::size_t>(a)]) {
      int b = g.edges[static_cast<std::size_t>(e)].second;
      if (visited_b[static_cast<std::size_t>(b)]) continue;
      visited_b[static_cast<std::size_t>(b)] = true;
      int other = match_b[static_cast<std::size_t>(b)];
      if (other < 0 || augment(g.edges[static_cast<std::size_t>(other)].first)) {
        match_a[static_cast<std::size_t>(a)] = e;
        match_b[static_cast<std::size_t>(b)] = e;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

MatchingResult max_matching_with_cover(const BipartiteGraph& g) {
  Kuhn kuhn(g);
  for (int a = 0; a < g.na; ++a) {
    std::fill(kuhn.visited_b.begin(), kuhn.visited_b.end(), false);
    kuhn.augment(a);
  }

  MatchingResult out;
  out.match_edge_of_a = kuhn.match_a;
  out.match_edge_of_b = kuhn.match_b;
  for (int b = 0; b < g.nb; ++b)
    if (kuhn.match_b[static_cast<std::size_t>(b)] >= 0)
      out.matching_edges.push_back(kuhn.match_b[static_cast<std::size_t>(b)]);

  // Konig: alternate from exposed A vertices; cover = (A \ Z) u (B n Z).
  std::vector<bool> za(static_cast<std::size_t>(g.na), false);
  std::vector<bool> zb(static_cast<std::size_t>(g.nb), false);
  std::vector<int> stack;
  for (int a = 0; a < g.na; ++a)
    if (kuhn.match_a[static_cast<std::size_t>(a)] < 0) {
      za[static_cast<std::size_t>(a)] = true;
      stack.push_back(a);
    }
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int e : kuhn.adj[static_cast<std::size_t>(a)]) {
      if (e == kuhn.match_a[static_cast<std::size_t>(a)]) continue;
      int b = g.edges[static_cast<std::size_t>(e)].second;
      if (zb[static_cast<std::size_t>(b)]) continue;
      zb[static_cast<std::size_t>(b)] = true;
      int me = kuhn.match_b[static_cast<std::size_t>(b)];
      if (me >= 0) {
        int a2 = g.edges[static_cast<std::size_t>(me)].first;
        if (!za[static_cast<std::size_t>(a2)]) {
          za[static_cast<std::size_t>(a2)] = true;
          stack.push_back(a2);
        }
      }
    }
  }
  for (int a = 0; a < g.na; ++a)
    if (!za[static_cast<std::size_t>(a)]) out.cover.emplace_back(false, a);
  for (int b = 0; b < g.nb; ++b)
    if (zb[static_cast<std::size_t>(b)]) out.cover.emplace_back(true, b);

  if (out.cover.size() != out.matching_edges.size())
    throw internal_error("max_matching_with_cover: Konig equality |M| == |C| failed");
  for (const auto& [a, b] : g.edges) {
    bool covered = false;
    for (const auto& [is_b, v] : out.cover)
      if ((is_b && v == b) || (!is_b && v == a)) {
        covered = true;
        break;
      }
    if (!covered) throw internal_error("max_matching_with_cover: uncovered edge");
  }
  return out;
}

}  // namespace djg
