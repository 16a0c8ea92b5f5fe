#include "djg/color_lines.hpp"

#include <algorithm>
#include <map>

#include "djg/errors.hpp"
#include "djg/matching.hpp"
#include "djg/predicates.hpp"

namespace djg {

std::vector<int> greedy_maximal_clique(const DGraph& g) {
  std::vector<int> clique;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool fits = true;
    for (int c : clique)
      if (!g.adjacent(v, static_cast<std::size_t>(c))) {
        fits = false;
        break;
      }
    if (fits) clique.push_back(static_cast<int>(v));
  }
  return clique;
}

std::vector<std::vector<int>> partition_by_clique(const DGraph& g,
                                                  const std::vector<int>& clique) {
  std::vector<std::vector<int>> cells(clique.size());
  std::vector<bool> in_clique(g.size(), false);
  for (std::size_t ci = 0; ci < clique.size(); ++ci) {
    in_clique[static_cast<std::size_t>(clique[ci])] = true;
    cells[ci].push_back(clique[ci]);
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (in_clique[v]) continue;
    bool assigned = false;
    for (std::size_t ci = 0; ci < clique.size(); ++ci) {
      if (!g.adjacent(v, static_cast<std::size_t>(clique[ci]))) {
        cells[ci].push_back(static_cast<int>(v));
        assigned = true;
        break;
      }
    }
    if (!assigned)
      throw internal_error("partition_by_clique: vertex disjoint from the whole maximal clique");
  }
  return cells;
}

namespace {

// Common point of a set of pairwise-meeting lines, if one exists.
std::optional<HomPoint> common_point(const std::vector<ProjLine>& lines) {
  if (lines.empty()) return std::nullopt;
  if (lines.size() == 1) return points_on_line(lines[0]).first;
  MeetResult meet = proj_lines_meet(lines[0], lines[1]);
  if (!std::holds_alternative<HomPoint>(meet)) return std::nullopt;
  HomPoint p = std::get<HomPoint>(meet);
  for (std::size_t i = 2; i < lines.size(); ++i)
    if (!point_on_line(p, lines[i])) return std::nullopt;
  return p;
}

}  // namespace

StarDecomposition star_decompose(const std::vector<ProjLine>& cell, int center) {
  StarDecomposition out;
  out.center = center;
  const std::size_t nl = cell.size();
  std::map<HomPoint, int> point_id;
  std::map<HomPlane, int> plane_id;
  for (std::size_t li = 0; li < nl; ++li) {
    if (static_cast<int>(li) == center) continue;
    if (cell[li] == cell[static_cast<std::size_t>(center)])
      throw invalid_input("star_decompose: duplicate of the center line");
    SpanStructure span = span_structure(cell[li], cell[static_cast<std::size_t>(center)]);
    auto [pit, pfresh] = point_id.emplace(span.point, static_cast<int>(out.points.size()));
    if (pfresh) out.points.push_back(span.point);
    auto [bit, bfresh] = plane_id.emplace(span.plane, static_cast<int>(out.planes.size()));
    if (bfresh) out.planes.push_back(span.plane);
    out.edges.push_back({pit->second, bit->second});
    out.edge_line.push_back(static_cast<int>(li));
  }

  out.color_of.assign(nl, -1);
  if (out.edges.empty()) {
    out.color_of[static_cast<std::size_t>(center)] = 0;
    out.class_witnesses.push_back(
        WitnessPointed{points_on_line(cell[static_cast<std::size_t>(center)]).first});
    out.clique.push_back(center);
    return out;
  }

  BipartiteGraph h{static_cast<int>(out.points.size()), static_cast<int>(out.planes.size()),
                   {}};
  for (const auto& e : out.edges) h.edges.emplace_back(e[0], e[1]);
  MatchingResult mr = max_matching_with_cover(h);
  out.matching = mr.matching_edges;
  out.cover = mr.cover;

  std::vector<int> class_of_point(out.points.size(), -1);
  std::vector<int> class_of_plane(out.planes.size(), -1);
  for (std::size_t ci = 0; ci < out.cover.size(); ++ci) {
    auto [is_b, v] = out.cover[ci];
    (is_b ? class_of_plane : class_of_point)[static_cast<std::size_t>(v)] =
        static_cast<int>(ci);
  }
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    int cls = class_of_point[static_cast<std::size_t>(out.edges[e][0])];
    if (cls < 0) cls = class_of_plane[static_cast<std::size_t>(out.edges[e][1])];
    if (cls < 0) throw internal_error("star_decompose: uncovered edge");
    out.color_of[static_cast<std::size_t>(out.edge_line[e])] = cls;
  }
  // The center meets every line of the cell, so it can join any class; use
  // the first one.
  out.color_of[static_cast<std::size_t>(center)] = 0;

  std::vector<std::vector<int>> members(out.cover.size());
  for (std::size_t li = 0; li < nl; ++li)
    members[static_cast<std::size_t>(out.color_of[li])].push_back(static_cast<int>(li));
  for (std::size_t ci = 0; ci < out.cover.size(); ++ci) {
    auto [is_b, v] = out.cover[ci];
    if (!is_b) {
      out.class_witnesses.push_back(WitnessPointed{out.points[static_cast<std::size_t>(v)]});
      continue;
    }
    std::vector<ProjLine> ls;
    for (int li : members[ci]) ls.push_back(cell[static_cast<std::size_t>(li)]);
    // Coplanar classes that happen to be pencils are reported as pointed.
    if (auto p = common_point(ls))
      out.class_witnesses.push_back(WitnessPointed{*p});
    else
      out.class_witnesses.push_back(WitnessPlanar{out.planes[static_cast<std::size_t>(v)]});
  }

  for (int e : out.matching) out.clique.push_back(out.edge_line[static_cast<std::size_t>(e)]);
  return out;
}

Certificate color_projective_lines(const std::vector<ProjLine>& lines) {
  Certificate cert;
  cert.mode = CertMode::lines_projective;
  cert.bound = "k^2";
  cert.clique_witness = CliqueSkew{};
  const std::size_t n = lines.size();
  if (n == 0) return cert;

  // Collapse duplicates; they can never be disjoint, so they share a color.
  std::map<ProjLine, int> rep_of;
  std::vector<int> rep_idx(n);
  std::vector<ProjLine> reps;
  std::vector<int> rep_original;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = rep_of.emplace(lines[i], static_cast<int>(reps.size()));
    if (fresh) {
      reps.push_back(lines[i]);
      rep_original.push_back(static_cast<int>(i));
    }
    rep_idx[i] = it->second;
  }

  const std::size_t nr = reps.size();
  std::vector<GeomObject> objs;
  objs.reserve(nr);
  for (const ProjLine& l : reps) objs.emplace_back(l);
  DGraph g = build_graph(std::move(objs), Mode::disjointness, Space::projective);

  std::vector<int> clique = greedy_maximal_clique(g);
  std::vector<std::vector<int>> cells = partition_by_clique(g, clique);

  std::vector<int> color_of_rep(nr, -1);
  std::vector<int> best_clique = clique;  // rep indices, pairwise skew
  for (const std::vector<int>& cell_members : cells) {
    std::vector<ProjLine> cell;
    cell.reserve(cell_members.size());
    for (int v : cell_members) cell.push_back(reps[static_cast<std::size_t>(v)]);
    StarDecomposition star = star_decompose(cell, 0);
    int offset = static_cast<int>(cert.classes.size());
    for (const ClassWitness& w : star.class_witnesses) cert.classes.push_back({w});
    for (std::size_t li = 0; li < cell_members.size(); ++li)
      color_of_rep[static_cast<std::size_t>(cell_members[li])] = offset + star.color_of[li];
    if (star.clique.size() > best_clique.size()) {
      best_clique.clear();
      for (int li : star.clique) best_clique.push_back(cell_members[static_cast<std::size_t>(li)]);
    }
  }

  cert.colors.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    cert.colors[i] = color_of_rep[static_cast<std::size_t>(rep_idx[i])];
  for (int r : best_clique) cert.clique.push_back(rep_original[static_cast<std::size_t>(r)]);

  Int k(cert.clique.size());
  if (Int(cert.classes.size()) > k * k)
    throw internal_error("color_projective_lines: color count exceeds |K|^2");
  return cert;
}

Bundles parallel_bundles(const std::vector<EuclLine>& lines) {
  Bundles out;
  std::map<std::array<Int, 3>, int> id;
  out.group_of.resize(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [it, fresh] = id.emplace(lines[i].dir(), static_cast<int>(out.groups.size()));
    if (fresh) out.groups.emplace_back();
    out.groups[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    out.group_of[i] = it->second;
  }
  for (const auto& grp : out.groups) out.max_size = std::max(out.max_size, grp.size());
  return out;
}

Certificate color_euclidean_lines(const std::vector<EuclLine>& lines) {
  Certificate cert;
  cert.mode = CertMode::lines_euclidean;
  cert.bound = "k^3";
  cert.clique_witness = CliqueSkew{};
  const std::size_t n = lines.size();
  if (n == 0) return cert;

  std::map<ProjLine, int> rep_of;  // the Plucker tuple identifies the line
  std::vector<int> rep_idx(n);
  std::vector<EuclLine> reps;
  std::vector<int> rep_original;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = rep_of.emplace(lines[i].plucker(), static_cast<int>(reps.size()));
    if (fresh) {
      reps.push_back(lines[i]);
      rep_original.push_back(static_cast<int>(i));
    }
    rep_idx[i] = it->second;
  }
  const std::size_t nr = reps.size();

  std::vector<ProjLine> pluckers;
  pluckers.reserve(nr);
  for (const EuclLine& l : reps) pluckers.push_back(l.plucker());
  Certificate proj = color_projective_lines(pluckers);
  Bundles bundles = parallel_bundles(reps);

  // Inside each projective class, member #j of its bundle takes slot j; slots
  // hold at most one line per direction, so they are independent over R^3.
  std::vector<std::vector<int>> class_members(proj.classes.size());
  for (std::size_t r = 0; r < nr; ++r)
    class_members[static_cast<std::size_t>(proj.colors[r])].push_back(static_cast<int>(r));
  std::vector<int> color_of_rep(nr, -1);
  for (std::size_t pc = 0; pc < class_members.size(); ++pc) {
    std::map<int, int> seen_in_bundle;  // bundle -> next slot
    std::map<int, int> slot_color;      // slot -> dense color id
    for (int r : class_members[pc]) {
      int slot = seen_in_bundle[bundles.group_of[static_cast<std::size_t>(r)]]++;
      auto [it, fresh] = slot_color.emplace(slot, static_cast<int>(cert.classes.size()));
      if (fresh) {
        const ClassWitness& parent = proj.classes[pc].witness;
        if (const auto* pointed = std::get_if<WitnessPointed>(&parent);
            pointed && pointed->point.is_ideal()) {
          cert.classes.push_back({WitnessBundle{
              std::array<Int, 3>{pointed->point[1], pointed->point[2], pointed->point[3]}}});
        } else {
          cert.classes.push_back({parent});
        }
      }
      color_of_rep[static_cast<std::size_t>(r)] = it->second;
    }
  }

  std::size_t best_bundle = 0;
  for (std::size_t b = 1; b < bundles.groups.size(); ++b)
    if (bundles.groups[b].size() > bundles.groups[best_bundle].size()) best_bundle = b;
  std::vector<int> clique_reps = proj.clique;  // rep space is shared
  if (!bundles.groups.empty() && bundles.groups[best_bundle].size() > clique_reps.size()) {
    clique_reps = bundles.groups[best_bundle];
    cert.clique_witness =
        CliqueBundle{reps[static_cast<std::size_t>(clique_reps[0])].dir()};
  }

  cert.colors.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    cert.colors[i] = color_of_rep[static_cast<std::size_t>(rep_idx[i])];
  for (int r : clique_reps) cert.clique.push_back(rep_original[static_cast<std::size_t>(r)]);

  Int k(cert.clique.size());
  if (Int(cert.classes.size()) > k * k * k)
    throw internal_error("color_euclidean_lines: color count exceeds |K|^3");
  return cert;
}

}  // namespace djg
