#include "djg/color_segments3d.hpp"

#include <algorithm>
#include <map>

#include "djg/chordal.hpp"
#include "djg/color_lines.hpp"
#include "djg/color_planar.hpp"
#include "djg/errors.hpp"
#include "djg/predicates.hpp"

namespace djg {

namespace {

bool segment_in_plane(const Segment& s, const HomPlane& plane) {
  return plane.contains(HomPoint::from_affine(s.a())) &&
         plane.contains(HomPoint::from_affine(s.b()));
}

// Drop one coordinate to map a plane bijectively onto R^2; any coordinate
// with nonzero normal component works and preserves incidence exactly.
Segment project_to_plane_coords(const Segment& s, std::size_t drop) {
  std::vector<Rat> a, b;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == drop) continue;
    a.push_back(s.a()[i]);
    b.push_back(s.b()[i]);
  }
  return Segment(AffinePoint(a), AffinePoint(b));
}

std::size_t plane_drop_coordinate(const HomPlane& plane) {
  for (std::size_t i = 1; i < 4; ++i)
    if (plane[i] != 0) return i - 1;
  throw invalid_input("color_segments_kplanes: degenerate plane (no normal)");
}

}  // namespace

Certificate color_segments_kplanes(const std::vector<Segment>& segs,
                                   const std::vector<HomPlane>& planes, std::mt19937_64& rng) {
  Certificate cert;
  cert.mode = CertMode::segments_kplanes;
  cert.bound = "(p-1)*k+k^4";
  cert.planes = planes;
  const std::size_t n = segs.size();
  if (n == 0) return cert;
  const std::size_t k = planes.size();

  std::vector<int> assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (segs[v].dim() != 3) throw invalid_input("color_segments_kplanes: need 3D segments");
    for (std::size_t j = 0; j < k; ++j)
      if (segment_in_plane(segs[v], planes[j])) assign[v] = static_cast<int>(j);
    if (assign[v] < 0)
      throw invalid_input("color_segments_kplanes: segment lies in no listed plane");
  }
  std::vector<std::vector<int>> V(k);
  for (std::size_t v = 0; v < n; ++v) V[static_cast<std::size_t>(assign[v])].push_back(static_cast<int>(v));

  cert.colors.assign(n, -1);
  std::vector<std::vector<int>> Z(k);
  std::vector<int> z_all;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> w;
    for (int v : V[i]) {
      bool clear = true;
      for (int t : z_all)
        if (!segments_disjoint(segs[static_cast<std::size_t>(v)],
                               segs[static_cast<std::size_t>(t)])) {
          clear = false;
          break;
        }
      if (clear) w.push_back(v);
    }
    if (w.empty()) continue;
    std::size_t drop = plane_drop_coordinate(planes[i]);
    std::vector<Segment> flat;
    flat.reserve(w.size());
    for (int v : w) flat.push_back(project_to_plane_coords(segs[static_cast<std::size_t>(v)], drop));
    Certificate cell = color_planar_segments(flat, rng);
    int offset = static_cast<int>(cert.classes.size());
    for (std::size_t c = 0; c < cell.classes.size(); ++c)
      cert.classes.push_back({WitnessPlanar{planes[i]}});
    for (std::size_t li = 0; li < w.size(); ++li)
      cert.colors[static_cast<std::size_t>(w[li])] = offset + cell.colors[li];
    for (int local : cell.clique) {
      Z[i].push_back(w[static_cast<std::size_t>(local)]);
      z_all.push_back(w[static_cast<std::size_t>(local)]);
    }
  }

  // Leftovers: each intersects an earlier-plane chain segment in the single
  // point where that segment pierces this plane; color by that point.
  std::map<HomPoint, int> piercing_color;
  std::size_t piercing_classes = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (cert.colors[v] >= 0) continue;
    const std::size_t i = static_cast<std::size_t>(assign[v]);
    bool colored = false;
    for (std::size_t h = 0; h < i && !colored; ++h) {
      for (int t : Z[h]) {
        if (segments_disjoint(segs[v], segs[static_cast<std::size_t>(t)])) continue;
        auto p = segment_intersection_point(segs[v], segs[static_cast<std::size_t>(t)]);
        if (!p) throw internal_error("color_segments_kplanes: non-point piercing intersection");
        HomPoint hp = HomPoint::from_affine(*p);
        auto [it, fresh] = piercing_color.emplace(hp, static_cast<int>(cert.classes.size()));
        if (fresh) {
          cert.classes.push_back({WitnessPiercing{hp}});
          ++piercing_classes;
        }
        cert.colors[v] = it->second;
        colored = true;
        break;
      }
    }
    if (!colored)
      throw internal_error("color_segments_kplanes: leftover meets no earlier chain segment");
  }

  cert.clique = z_all;
  cert.clique_witness = CliqueDisjoint{};
  for (std::size_t a = 0; a < z_all.size(); ++a)
    for (std::size_t b = a + 1; b < z_all.size(); ++b)
      if (!segments_disjoint(segs[static_cast<std::size_t>(z_all[a])],
                             segs[static_cast<std::size_t>(z_all[b])]))
        throw internal_error("color_segments_kplanes: chain union is not a clique");
  if (k >= 1 && Int(piercing_classes) > Int(k - 1) * Int(z_all.size()))
    throw internal_error("color_segments_kplanes: piercing color count exceeds (k-1)|K|");
  if (Int(cert.classes.size()) > eval_bound(cert.bound, cert.clique.size(), k))
    throw internal_error("color_segments_kplanes: color count exceeds the bound");
  return cert;
}

Certificate color_segments_kplanes(const std::vector<Segment>& segs,
                                   const std::vector<HomPlane>& planes) {
  std::mt19937_64 rng(0x5eed0002u);
  return color_segments_kplanes(segs, planes, rng);
}

ClassifiedClasses classify_color_classes(const Certificate& proj_cert) {
  ClassifiedClasses out;
  std::vector<std::vector<int>> members(proj_cert.classes.size());
  for (std::size_t v = 0; v < proj_cert.colors.size(); ++v)
    members[static_cast<std::size_t>(proj_cert.colors[v])].push_back(static_cast<int>(v));
  std::map<HomPlane, bool> plane_seen;
  std::map<HomPoint, std::size_t> apex_id;
  for (std::size_t c = 0; c < proj_cert.classes.size(); ++c) {
    const ClassWitness& w = proj_cert.classes[c].witness;
    if (const auto* planar = std::get_if<WitnessPlanar>(&w)) {
      auto [it, fresh] = plane_seen.emplace(planar->plane, true);
      (void)it;
      if (fresh) out.planes.push_back(planar->plane);
      for (int v : members[c]) out.planar_members.push_back(v);
    } else if (const auto* pointed = std::get_if<WitnessPointed>(&w)) {
      auto [it, fresh] = apex_id.emplace(pointed->point, out.pointed.size());
      if (fresh) out.pointed.emplace_back(pointed->point, std::vector<int>{});
      auto& lst = out.pointed[it->second].second;
      for (int v : members[c]) lst.push_back(v);
    } else {
      throw invalid_input("classify_color_classes: unexpected witness kind");
    }
  }
  std::sort(out.planar_members.begin(), out.planar_members.end());
  return out;
}

PointedClassResult color_pointed_class(const std::vector<Segment>& segs, const HomPoint& apex) {
  PointedClassResult out;
  const std::size_t m = segs.size();
  if (m == 0) return out;

  std::vector<EuclLine> lines;
  lines.reserve(m);
  for (const Segment& s : segs) {
    EuclLine l = supporting_line(s);
    if (!point_on_line(apex, l.plucker()))
      throw invalid_input("color_pointed_class: supporting line misses the apex");
    lines.push_back(std::move(l));
  }

  std::vector<std::vector<bool>> meets(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      meets[i][j] = meets[j][i] = !segments_disjoint(segs[i], segs[j]);

  auto peo = perfect_elimination_ordering(meets);
  if (!peo)
    throw internal_error("color_pointed_class: intersection graph is not chordal");
  CliqueCover cover = gavril_clique_cover(meets, *peo);
  out.colors = cover.class_of;
  out.independent_set = cover.independent_set;

  std::vector<std::vector<int>> members(static_cast<std::size_t>(cover.num_classes));
  for (std::size_t v = 0; v < m; ++v)
    members[static_cast<std::size_t>(out.colors[v])].push_back(static_cast<int>(v));
  for (const std::vector<int>& cls : members) {
    bool all_apex = true;
    for (int v : cls)
      if (!segment_contains_point(segs[static_cast<std::size_t>(v)], apex)) {
        all_apex = false;
        break;
      }
    if (all_apex) {
      out.witnesses.push_back(WitnessPointed{apex});
      continue;
    }
    // Not a star at the apex: then the class lives on one supporting line and
    // pairwise-overlapping intervals have a common point (1D Helly).
    const EuclLine& carrier = lines[static_cast<std::size_t>(cls[0])];
    std::size_t piv = 0;
    while (carrier.dir()[piv] == 0) ++piv;
    Rat best_lo;
    Rat best_hi;
    bool first = true;
    for (int v : cls) {
      if (!(lines[static_cast<std::size_t>(v)] == carrier))
        throw internal_error("color_pointed_class: mixed carrier lines in a cover class");
      const Segment& s = segs[static_cast<std::size_t>(v)];
      Rat ta = (s.a()[piv] - carrier.base()[piv]) / Rat(carrier.dir()[piv]);
      Rat tb = (s.b()[piv] - carrier.base()[piv]) / Rat(carrier.dir()[piv]);
      if (ta > tb) std::swap(ta, tb);
      if (first || ta > best_lo) best_lo = ta;
      if (first || tb < best_hi) best_hi = tb;
      first = false;
    }
    if (best_lo > best_hi)
      throw internal_error("color_pointed_class: cover class with empty interval intersection");
    AffinePoint p(carrier.base()[0] + best_lo * Rat(carrier.dir()[0]),
                  carrier.base()[1] + best_lo * Rat(carrier.dir()[1]),
                  carrier.base()[2] + best_lo * Rat(carrier.dir()[2]));
    out.witnesses.push_back(WitnessPointed{HomPoint::from_affine(p)});
  }
  return out;
}

Certificate color_segments_3d(const std::vector<Segment>& segs, std::mt19937_64& rng) {
  Certificate cert;
  cert.mode = CertMode::segments_3d;
  cert.bound = "k^4+k^3";
  const std::size_t n = segs.size();
  if (n == 0) return cert;
  for (const Segment& s : segs)
    if (s.dim() != 3) throw invalid_input("color_segments_3d: need 3D segments");

  // Vertex space of the projective certificate: distinct supporting lines.
  std::map<ProjLine, int> line_id;
  std::vector<ProjLine> lines;
  std::vector<int> line_of(n);
  for (std::size_t v = 0; v < n; ++v) {
    ProjLine l = supporting_line(segs[v]).plucker();
    auto [it, fresh] = line_id.emplace(l, static_cast<int>(lines.size()));
    if (fresh) lines.push_back(l);
    line_of[v] = it->second;
  }

  Certificate proj = color_projective_lines(lines);
  ClassifiedClasses cls = classify_color_classes(proj);

  std::vector<bool> line_is_planar(lines.size(), false);
  for (int l : cls.planar_members) line_is_planar[static_cast<std::size_t>(l)] = true;

  cert.colors.assign(n, -1);

  std::vector<int> planar_segs_idx;
  for (std::size_t v = 0; v < n; ++v)
    if (line_is_planar[static_cast<std::size_t>(line_of[v])])
      planar_segs_idx.push_back(static_cast<int>(v));
  std::vector<int> best_clique;
  CliqueWitness best_witness = CliqueDisjoint{};
  if (!planar_segs_idx.empty()) {
    std::vector<Segment> planar_segs;
    planar_segs.reserve(planar_segs_idx.size());
    for (int v : planar_segs_idx) planar_segs.push_back(segs[static_cast<std::size_t>(v)]);
    Certificate kcert = color_segments_kplanes(planar_segs, cls.planes, rng);
    int offset = static_cast<int>(cert.classes.size());
    for (const ColorClassInfo& info : kcert.classes) cert.classes.push_back(info);
    for (std::size_t li = 0; li < planar_segs_idx.size(); ++li)
      cert.colors[static_cast<std::size_t>(planar_segs_idx[li])] = offset + kcert.colors[li];
    for (int local : kcert.clique)
      best_clique.push_back(planar_segs_idx[static_cast<std::size_t>(local)]);
  }

  // Pointed classes, one chordal cover each.
  std::vector<std::vector<int>> line_segs(lines.size());
  for (std::size_t v = 0; v < n; ++v)
    line_segs[static_cast<std::size_t>(line_of[v])].push_back(static_cast<int>(v));
  std::vector<int> best_pointed;
  for (const auto& [apex, class_lines] : cls.pointed) {
    std::vector<int> idx;
    for (int l : class_lines)
      for (int v : line_segs[static_cast<std::size_t>(l)]) idx.push_back(v);
    std::sort(idx.begin(), idx.end());
    std::vector<Segment> part;
    part.reserve(idx.size());
    for (int v : idx) part.push_back(segs[static_cast<std::size_t>(v)]);
    PointedClassResult pr = color_pointed_class(part, apex);
    int offset = static_cast<int>(cert.classes.size());
    for (const ClassWitness& w : pr.witnesses) cert.classes.push_back({w});
    for (std::size_t li = 0; li < idx.size(); ++li)
      cert.colors[static_cast<std::size_t>(idx[li])] = offset + pr.colors[li];
    if (pr.independent_set.size() > best_pointed.size()) {
      best_pointed.clear();
      for (int local : pr.independent_set)
        best_pointed.push_back(idx[static_cast<std::size_t>(local)]);
    }
  }
  if (best_pointed.size() > best_clique.size()) {
    best_clique = best_pointed;
    best_witness = CliqueDisjoint{};
  }

  // Lift the projective clique: one segment per pairwise-skew line.
  if (proj.clique.size() > best_clique.size()) {
    best_clique.clear();
    for (int l : proj.clique)
      best_clique.push_back(line_segs[static_cast<std::size_t>(l)].front());
    best_witness = CliqueSkew{};
  }
  cert.clique = best_clique;
  cert.clique_witness = best_witness;

  Int k(cert.clique.size());
  if (Int(cert.classes.size()) > k * k * k * k + k * k * k)
    throw internal_error("color_segments_3d: color count exceeds |K|^4 + |K|^3");
  return cert;
}

Certificate color_segments_3d(const std::vector<Segment>& segs) {
  std::mt19937_64 rng(0x5eed0003u);
  return color_segments_3d(segs, rng);
}

}  // namespace djg
