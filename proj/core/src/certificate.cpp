#include "djg/certificate.hpp"

#include <algorithm>
#include <set>

#include "djg/color_planar.hpp"
#include "djg/errors.hpp"
#include "djg/predicates.hpp"

namespace djg {

std::string to_string(CertMode m) {
  switch (m) {
    case CertMode::planar_segments: return "planar-segments";
    case CertMode::segments_3d: return "segments-3d";
    case CertMode::segments_kplanes: return "segments-kplanes";
    case CertMode::lines_euclidean: return "lines-euclidean";
    case CertMode::lines_projective: return "lines-projective";
  }
  return "?";
}

std::optional<CertMode> cert_mode_from_string(const std::string& s) {
  if (s == "planar-segments") return CertMode::planar_segments;
  if (s == "segments-3d") return CertMode::segments_3d;
  if (s == "segments-kplanes") return CertMode::segments_kplanes;
  if (s == "lines-euclidean") return CertMode::lines_euclidean;
  if (s == "lines-projective") return CertMode::lines_projective;
  return std::nullopt;
}

std::string to_string(OrderId o) {
  switch (o) {
    case OrderId::nest_below: return "nest-below";
    case OrderId::nest_above: return "nest-above";
    case OrderId::stag_below: return "stag-below";
    case OrderId::stag_above: return "stag-above";
  }
  return "?";
}

std::optional<OrderId> order_from_string(const std::string& s) {
  if (s == "nest-below") return OrderId::nest_below;
  if (s == "nest-above") return OrderId::nest_above;
  if (s == "stag-below") return OrderId::stag_below;
  if (s == "stag-above") return OrderId::stag_above;
  return std::nullopt;
}

Int eval_bound(const std::string& bound, std::size_t k, std::size_t planes_count) {
  Int K(static_cast<unsigned long>(k));
  if (bound == "k^2") return K * K;
  if (bound == "k^3") return K * K * K;
  if (bound == "k^4") return K * K * K * K;
  if (bound == "k^4+k^3") return K * K * K * K + K * K * K;
  if (bound == "(p-1)*k+k^4") {
    if (planes_count == 0) return K * K * K * K;
    Int P(static_cast<unsigned long>(planes_count));
    return (P - 1) * K + K * K * K * K;
  }
  throw invalid_input("eval_bound: unknown bound formula '" + bound + "'");
}

namespace {

Segment shear_segment(const Segment& s, const Rat& eps) {
  AffinePoint a(s.a()[0] + eps * s.a()[1], s.a()[1]);
  AffinePoint b(s.b()[0] + eps * s.b()[1], s.b()[1]);
  return Segment(a, b);
}

bool object_contains_point(const GeomObject& o, const HomPoint& p) {
  switch (kind_of(o)) {
    case ObjectKind::segments: {
      const Segment& s = std::get<Segment>(o);
      return s.dim() == 3 && segment_contains_point(s, p);
    }
    case ObjectKind::eucl_lines:
      return point_on_line(p, std::get<EuclLine>(o).plucker());
    case ObjectKind::proj_lines:
      return point_on_line(p, std::get<ProjLine>(o));
    default:
      return false;
  }
}

bool object_in_plane(const GeomObject& o, const HomPlane& plane) {
  switch (kind_of(o)) {
    case ObjectKind::segments: {
      const Segment& s = std::get<Segment>(o);
      if (s.dim() != 3) return false;
      return plane.contains(HomPoint::from_affine(s.a())) &&
             plane.contains(HomPoint::from_affine(s.b()));
    }
    case ObjectKind::eucl_lines:
      return line_in_plane(std::get<EuclLine>(o).plucker(), plane);
    case ObjectKind::proj_lines:
      return line_in_plane(std::get<ProjLine>(o), plane);
    default:
      return false;
  }
}

std::optional<std::array<Int, 3>> object_direction(const GeomObject& o) {
  if (kind_of(o) == ObjectKind::eucl_lines) return std::get<EuclLine>(o).dir();
  return std::nullopt;
}

ProjLine object_proj_line(const GeomObject& o) {
  switch (kind_of(o)) {
    case ObjectKind::segments: {
      const Segment& s = std::get<Segment>(o);
      if (s.dim() != 3) throw invalid_input("certificate: skew witness needs 3D segments");
      return supporting_line(s).plucker();
    }
    case ObjectKind::eucl_lines:
      return std::get<EuclLine>(o).plucker();
    case ObjectKind::proj_lines:
      return std::get<ProjLine>(o);
    default:
      throw invalid_input("certificate: object has no supporting line");
  }
}

struct WitnessChecker {
  const DGraph& g;
  const Certificate& c;
  std::string* detail;

  bool fail(const std::string& msg) const {
    if (detail->empty()) *detail = msg;
    return false;
  }

  bool check_class(int color, const std::vector<int>& members) const {
    const ClassWitness& w = c.classes[static_cast<std::size_t>(color)].witness;
    bool ok = true;
    if (const auto* pointed = std::get_if<WitnessPointed>(&w)) {
      for (int v : members)
        if (!object_contains_point(g.objects()[static_cast<std::size_t>(v)], pointed->point))
          return fail("class witness: member misses the common point");
    } else if (const auto* planar = std::get_if<WitnessPlanar>(&w)) {
      for (int v : members)
        if (!object_in_plane(g.objects()[static_cast<std::size_t>(v)], planar->plane))
          return fail("class witness: member not in the common plane");
    } else if (const auto* piercing = std::get_if<WitnessPiercing>(&w)) {
      for (int v : members)
        if (!object_contains_point(g.objects()[static_cast<std::size_t>(v)], piercing->point))
          return fail("class witness: member misses the piercing point");
    } else if (const auto* bundle = std::get_if<WitnessBundle>(&w)) {
      for (int v : members) {
        auto dir = object_direction(g.objects()[static_cast<std::size_t>(v)]);
        if (!dir || *dir != bundle->dir)
          return fail("class witness: member direction differs from the bundle");
      }
    } else if (const auto* anti = std::get_if<WitnessAntichain>(&w)) {
      if (!c.shear) return fail("class witness: antichain without recorded shear");
      std::vector<Segment> sheared;
      for (int v : members) {
        const GeomObject& o = g.objects()[static_cast<std::size_t>(v)];
        if (kind_of(o) != ObjectKind::segments)
          return fail("class witness: antichain over non-segments");
        sheared.push_back(shear_segment(std::get<Segment>(o), *c.shear));
      }
      (void)anti;
      for (std::size_t i = 0; i < sheared.size() && ok; ++i)
        for (std::size_t j = i + 1; j < sheared.size(); ++j) {
          OrderMask m;
          try {
            m = order_compare(sheared[i], sheared[j]);
          } catch (const invalid_input&) {
            return fail("class witness: vertical segment under recorded shear");
          }
          if (m != 0) return fail("class witness: antichain members are comparable");
        }
    }
    // Euclidean line classes must take at most one member per parallel
    // bundle; equal lines (duplicates) are the same member.
    if (ok && c.mode == CertMode::lines_euclidean) {
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          const auto& oi = g.objects()[static_cast<std::size_t>(members[i])];
          const auto& oj = g.objects()[static_cast<std::size_t>(members[j])];
          const auto& li = std::get<EuclLine>(oi);
          const auto& lj = std::get<EuclLine>(oj);
          if (li.dir() == lj.dir() && !(li == lj))
            return fail("class witness: two distinct parallel lines share a color");
        }
    }
    return ok;
  }

  bool check_clique() const {
    if (const auto* chain = std::get_if<CliqueChain>(&c.clique_witness)) {
      if (!c.shear) return fail("clique witness: chain without recorded shear");
      std::vector<Segment> sheared;
      for (int v : c.clique) {
        const GeomObject& o = g.objects()[static_cast<std::size_t>(v)];
        if (kind_of(o) != ObjectKind::segments)
          return fail("clique witness: chain over non-segments");
        sheared.push_back(shear_segment(std::get<Segment>(o), *c.shear));
      }
      for (std::size_t i = 0; i < sheared.size(); ++i)
        for (std::size_t j = i + 1; j < sheared.size(); ++j) {
          OrderMask m;
          try {
            m = order_compare(sheared[i], sheared[j]);
          } catch (const invalid_input&) {
            return fail("clique witness: vertical segment under recorded shear");
          }
          if (!precedes(m, chain->order) && !succeeds(m, chain->order))
            return fail("clique witness: chain members incomparable in the declared order");
        }
      return true;
    }
    if (std::holds_alternative<CliqueSkew>(c.clique_witness)) {
      std::vector<ProjLine> lines;
      for (int v : c.clique) lines.push_back(object_proj_line(g.objects()[static_cast<std::size_t>(v)]));
      for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
          if (plucker_side_form(lines[i], lines[j]) == 0)
            return fail("clique witness: declared-skew lines meet");
      return true;
    }
    if (const auto* bundle = std::get_if<CliqueBundle>(&c.clique_witness)) {
      for (int v : c.clique) {
        auto dir = object_direction(g.objects()[static_cast<std::size_t>(v)]);
        if (!dir || *dir != bundle->dir)
          return fail("clique witness: member direction differs from the bundle");
      }
      return true;
    }
    return true;  // CliqueDisjoint: pairwise adjacency is checked separately
  }
};

}  // namespace

VerifyReport verify_certificate(const DGraph& g, const Certificate& c) {
  const std::size_t n = g.size();
  VerifyReport rep;
  if (c.colors.size() != n) throw invalid_input("verify_certificate: coloring size mismatch");
  const int num_classes = static_cast<int>(c.classes.size());
  for (int col : c.colors)
    if (col < 0 || col >= num_classes)
      throw invalid_input("verify_certificate: color id out of range");
  for (int v : c.clique)
    if (v < 0 || v >= static_cast<int>(n))
      throw invalid_input("verify_certificate: clique vertex out of range");

  rep.proper = true;
  for (std::size_t i = 0; i < n && rep.proper; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(i, j) && c.colors[i] == c.colors[j]) {
        rep.proper = false;
        if (rep.detail.empty()) rep.detail = "monochromatic edge";
        break;
      }

  rep.clique_ok = true;
  std::set<int> uniq(c.clique.begin(), c.clique.end());
  if (uniq.size() != c.clique.size()) {
    rep.clique_ok = false;
    if (rep.detail.empty()) rep.detail = "clique repeats a vertex";
  }
  for (std::size_t i = 0; i < c.clique.size() && rep.clique_ok; ++i)
    for (std::size_t j = i + 1; j < c.clique.size(); ++j)
      if (!g.adjacent(static_cast<std::size_t>(c.clique[i]),
                      static_cast<std::size_t>(c.clique[j]))) {
        rep.clique_ok = false;
        if (rep.detail.empty()) rep.detail = "clique pair not adjacent";
        break;
      }

  std::set<int> used(c.colors.begin(), c.colors.end());
  rep.bound_ok = Int(used.size()) <= eval_bound(c.bound, c.clique.size(), c.planes.size());
  if (!rep.bound_ok && rep.detail.empty()) rep.detail = "color count exceeds the claimed bound";

  WitnessChecker checker{g, c, &rep.detail};
  rep.class_witness_ok = true;
  std::vector<std::vector<int>> members(c.classes.size());
  for (std::size_t v = 0; v < n; ++v)
    members[static_cast<std::size_t>(c.colors[v])].push_back(static_cast<int>(v));
  for (int col = 0; col < num_classes && rep.class_witness_ok; ++col)
    rep.class_witness_ok = checker.check_class(col, members[static_cast<std::size_t>(col)]);
  if (rep.class_witness_ok) rep.class_witness_ok = checker.check_clique();
  return rep;
}

RamseyWitness extract_ramsey_witness(const DGraph& g, const Certificate& c) {
  VerifyReport rep = verify_certificate(g, c);
  if (!rep.ok()) throw invalid_input("extract_ramsey_witness: certificate does not verify");
  std::vector<std::vector<int>> members(c.classes.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    members[static_cast<std::size_t>(c.colors[v])].push_back(static_cast<int>(v));
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].size() > members[best].size()) best = i;
  std::size_t largest = members.empty() ? 0 : members[best].size();
  if (c.clique.size() >= largest) return {true, c.clique};
  return {false, members[best]};
}

}  // namespace djg
