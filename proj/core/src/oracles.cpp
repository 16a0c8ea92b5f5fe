#include "djg/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "djg/errors.hpp"
#include "djg/predicates.hpp"

namespace djg {

namespace {

using AdjMatrix = std::vector<std::vector<bool>>;

struct MaxCliqueSolver {
  const AdjMatrix& adj;
  std::vector<int> best;
  std::vector<int> current;

  explicit MaxCliqueSolver(const AdjMatrix& a) : adj(a) {}

  void expand(const std::vector<int>& candidates) {
    if (candidates.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Greedy coloring bound: vertices in color class c can contribute at
    // most c more vertices to a clique.
    std::vector<std::vector<int>> classes;
    for (int v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = false;
        for (int u : cls)
          if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
            clash = true;
            break;
          }
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    std::vector<std::pair<int, int>> ordered;  // (vertex, bound)
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) ordered.emplace_back(v, static_cast<int>(c) + 1);
    for (std::size_t i = ordered.size(); i-- > 0;) {
      auto [v, bound] = ordered[i];
      if (current.size() + static_cast<std::size_t>(bound) <= best.size()) return;
      std::vector<int> next;
      for (std::size_t j = 0; j < i; ++j) {
        int u = ordered[j].first;
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) next.push_back(u);
      }
      current.push_back(v);
      expand(next);
      current.pop_back();
    }
  }
};

OracleSet max_clique_of(const AdjMatrix& adj) {
  const std::size_t n = adj.size();
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j]) ++deg[i];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
  MaxCliqueSolver solver(adj);
  solver.expand(order);
  std::sort(solver.best.begin(), solver.best.end());
  return {static_cast<int>(solver.best.size()), solver.best};
}

struct ChromaticSolver {
  const AdjMatrix& adj;
  std::size_t n;
  int k = 0;
  std::vector<int> colors;

  explicit ChromaticSolver(const AdjMatrix& a) : adj(a), n(a.size()) {}

  bool decide(int target, const std::vector<int>& seed_clique) {
    k = target;
    colors.assign(n, -1);
    int used = 0;
    for (int v : seed_clique) {
      if (used >= k) return false;
      colors[static_cast<std::size_t>(v)] = used++;
    }
    return dfs(used);
  }

  bool dfs(int used) {
    // Most-constrained vertex (max saturation, then max degree).
    int pick = -1;
    std::size_t best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] >= 0) continue;
      std::set<int> sat;
      std::size_t deg = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (!adj[v][u]) continue;
        ++deg;
        if (colors[u] >= 0) sat.insert(colors[u]);
      }
      if (pick < 0 || sat.size() > best_sat || (sat.size() == best_sat && deg > best_deg)) {
        pick = static_cast<int>(v);
        best_sat = sat.size();
        best_deg = deg;
      }
    }
    if (pick < 0) return true;
    std::vector<bool> banned(static_cast<std::size_t>(k), false);
    for (std::size_t u = 0; u < n; ++u)
      if (adj[static_cast<std::size_t>(pick)][u] && colors[u] >= 0)
        banned[static_cast<std::size_t>(colors[u])] = true;
    int limit = std::min(k, used + 1);  // fresh colors are interchangeable
    for (int c = 0; c < limit; ++c) {
      if (banned[static_cast<std::size_t>(c)]) continue;
      colors[static_cast<std::size_t>(pick)] = c;
      if (dfs(std::max(used, c + 1))) return true;
      colors[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }
};

int greedy_chromatic_upper(const AdjMatrix& adj, std::vector<int>& out_colors) {
  const std::size_t n = adj.size();
  out_colors.assign(n, -1);
  int used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    // DSATUR pick.
    int pick = -1;
    std::size_t best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (out_colors[v] >= 0) continue;
      std::set<int> sat;
      std::size_t deg = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (!adj[v][u]) continue;
        ++deg;
        if (out_colors[u] >= 0) sat.insert(out_colors[u]);
      }
      if (pick < 0 || sat.size() > best_sat || (sat.size() == best_sat && deg > best_deg)) {
        pick = static_cast<int>(v);
        best_sat = sat.size();
        best_deg = deg;
      }
    }
    std::set<int> banned;
    for (std::size_t u = 0; u < n; ++u)
      if (adj[static_cast<std::size_t>(pick)][u] && out_colors[u] >= 0)
        banned.insert(out_colors[u]);
    int c = 0;
    while (banned.count(c)) ++c;
    out_colors[static_cast<std::size_t>(pick)] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

OracleColoring exact_chromatic(const DGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap) throw cap_exceeded("exact_chromatic: instance above cap");
  if (n == 0) return {0, {}};
  const AdjMatrix& adj = g.adj();
  OracleSet lb = max_clique_of(adj);
  std::vector<int> greedy;
  int ub = greedy_chromatic_upper(adj, greedy);
  ChromaticSolver solver(adj);
  for (int k = lb.value; k < ub; ++k)
    if (solver.decide(k, lb.members)) return {k, solver.colors};
  return {ub, greedy};
}

OracleSet exact_clique(const DGraph& g, std::size_t cap) {
  if (g.size() > cap) throw cap_exceeded("exact_clique: instance above cap");
  return max_clique_of(g.adj());
}

OracleSet exact_independence(const DGraph& g, std::size_t cap) {
  if (g.size() > cap) throw cap_exceeded("exact_independence: instance above cap");
  const std::size_t n = g.size();
  AdjMatrix co(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) co[i][j] = !g.adjacent(i, j);
  return max_clique_of(co);
}

namespace {

struct LineReps {
  std::vector<ProjLine> reps;
  std::vector<std::vector<int>> originals;  // per rep
};

LineReps dedupe_lines(const std::vector<ProjLine>& lines) {
  LineReps out;
  std::map<ProjLine, std::size_t> id;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [it, fresh] = id.emplace(lines[i], out.reps.size());
    if (fresh) {
      out.reps.push_back(lines[i]);
      out.originals.emplace_back();
    }
    out.originals[it->second].push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> expand(const LineReps& reps, const std::vector<int>& rep_members) {
  std::vector<int> out;
  for (int r : rep_members)
    for (int o : reps.originals[static_cast<std::size_t>(r)]) out.push_back(o);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

OmegaLinesResult omega_intersection_lines(const std::vector<ProjLine>& lines) {
  if (lines.empty()) return {0, std::nullopt};
  LineReps reps = dedupe_lines(lines);
  const std::size_t nr = reps.reps.size();

  // Fallback: the heaviest single line (its copies pairwise intersect).
  std::size_t best_r = 0;
  for (std::size_t r = 1; r < nr; ++r)
    if (reps.originals[r].size() > reps.originals[best_r].size()) best_r = r;
  MaximalCliqueWitness best;
  best.kind = MaximalCliqueWitness::Kind::point;
  best.point = points_on_line(reps.reps[best_r]).first;
  best.members = expand(reps, {static_cast<int>(best_r)});

  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = i + 1; j < nr; ++j) {
      if (plucker_side_form(reps.reps[i], reps.reps[j]) != 0) continue;
      SpanStructure span = span_structure(reps.reps[i], reps.reps[j]);
      std::vector<int> through, within;
      for (std::size_t r = 0; r < nr; ++r) {
        if (point_on_line(span.point, reps.reps[r])) through.push_back(static_cast<int>(r));
        if (line_in_plane(reps.reps[r], span.plane)) within.push_back(static_cast<int>(r));
      }
      std::vector<int> through_all = expand(reps, through);
      if (through_all.size() > best.members.size()) {
        best.kind = MaximalCliqueWitness::Kind::point;
        best.point = span.point;
        best.members = through_all;
      }
      std::vector<int> within_all = expand(reps, within);
      if (within_all.size() > best.members.size()) {
        best.kind = MaximalCliqueWitness::Kind::plane;
        best.plane = span.plane;
        best.members = within_all;
      }
    }
  }
  return {best.members.size(), best};
}

std::optional<std::vector<MaximalCliqueWitness>> clique_cover_at_most_k(
    const std::vector<ProjLine>& lines, std::size_t k, std::size_t k_cap) {
  if (k > k_cap) throw cap_exceeded("clique_cover_at_most_k: k above cap");
  if (lines.empty()) return std::vector<MaximalCliqueWitness>{};
  LineReps reps = dedupe_lines(lines);
  const std::size_t nr = reps.reps.size();

  std::vector<MaximalCliqueWitness> candidates;
  std::set<std::vector<int>> seen;
  auto add_candidate = [&](MaximalCliqueWitness w) {
    std::sort(w.members.begin(), w.members.end());
    if (seen.insert(w.members).second) candidates.push_back(std::move(w));
  };
  for (std::size_t r = 0; r < nr; ++r) {
    MaximalCliqueWitness w;
    w.kind = MaximalCliqueWitness::Kind::point;
    w.point = points_on_line(reps.reps[r]).first;
    w.members = {static_cast<int>(r)};
    add_candidate(std::move(w));
  }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = i + 1; j < nr; ++j) {
      if (plucker_side_form(reps.reps[i], reps.reps[j]) != 0) continue;
      SpanStructure span = span_structure(reps.reps[i], reps.reps[j]);
      MaximalCliqueWitness wp;
      wp.kind = MaximalCliqueWitness::Kind::point;
      wp.point = span.point;
      MaximalCliqueWitness wq;
      wq.kind = MaximalCliqueWitness::Kind::plane;
      wq.plane = span.plane;
      for (std::size_t r = 0; r < nr; ++r) {
        if (point_on_line(span.point, reps.reps[r])) wp.members.push_back(static_cast<int>(r));
        if (line_in_plane(reps.reps[r], span.plane)) wq.members.push_back(static_cast<int>(r));
      }
      add_candidate(std::move(wp));
      add_candidate(std::move(wq));
    }

  std::vector<std::vector<int>> containing(nr);
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (int r : candidates[c].members)
      containing[static_cast<std::size_t>(r)].push_back(static_cast<int>(c));

  std::vector<int> chosen;
  std::vector<int> covered(nr, 0);
  std::size_t uncovered = nr;
  std::vector<MaximalCliqueWitness> result;

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (uncovered == 0) return true;
    if (depth == k) return false;
    std::size_t u = 0;
    while (covered[u] > 0) ++u;
    for (int c : containing[u]) {
      const auto& mem = candidates[static_cast<std::size_t>(c)].members;
      for (int r : mem)
        if (covered[static_cast<std::size_t>(r)]++ == 0) --uncovered;
      chosen.push_back(c);
      if (self(self, depth + 1)) return true;
      chosen.pop_back();
      for (int r : mem)
        if (--covered[static_cast<std::size_t>(r)] == 0) ++uncovered;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  for (int c : chosen) {
    MaximalCliqueWitness w = candidates[static_cast<std::size_t>(c)];
    w.members = expand(reps, w.members);
    result.push_back(std::move(w));
  }
  return result;
}

}  // namespace djg
