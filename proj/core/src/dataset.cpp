#include "djg/dataset.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "djg/errors.hpp"

namespace djg {

namespace {

using nlohmann::json;

Rat parse_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw invalid_input("dataset: rational must be a string or integer");
  auto r = rat_from_string(j.get<std::string>());
  if (!r) throw invalid_input("dataset: bad rational '" + j.get<std::string>() + "'");
  return *r;
}

json rat_json(const Rat& r) { return rat_to_string(r); }

std::vector<Rat> parse_rat_array(const json& j, std::size_t expect = 0) {
  if (!j.is_array()) throw invalid_input("dataset: expected an array of rationals");
  if (expect && j.size() != expect) throw invalid_input("dataset: wrong tuple length");
  std::vector<Rat> out;
  for (const auto& v : j) out.push_back(parse_rat(v));
  return out;
}

json rat_array_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& r : v) out.push_back(rat_json(r));
  return out;
}

AffinePoint parse_point(const json& j, std::size_t dim) {
  return AffinePoint(parse_rat_array(j, dim));
}

json point_json(const AffinePoint& p) { return rat_array_json(p.coords()); }

HomPoint parse_hom_point(const json& j) {
  auto v = parse_rat_array(j, 4);
  return HomPoint(std::array<Rat, 4>{v[0], v[1], v[2], v[3]});
}

json hom_point_json(const HomPoint& p) {
  json out = json::array();
  for (std::size_t i = 0; i < 4; ++i) out.push_back(p[i].str());
  return out;
}

HomPlane parse_hom_plane(const json& j) {
  auto v = parse_rat_array(j, 4);
  return HomPlane(std::array<Rat, 4>{v[0], v[1], v[2], v[3]});
}

json hom_plane_json(const HomPlane& p) {
  json out = json::array();
  for (std::size_t i = 0; i < 4; ++i) out.push_back(p[i].str());
  return out;
}

Segment parse_segment(const json& j, std::size_t dim) {
  return Segment(parse_point(j.at("a"), dim), parse_point(j.at("b"), dim));
}

json segment_json(const Segment& s) {
  return json{{"a", point_json(s.a())}, {"b", point_json(s.b())}};
}

std::optional<ObjectKind> kind_from_string(const std::string& s) {
  if (s == "segments") return ObjectKind::segments;
  if (s == "eucl-lines") return ObjectKind::eucl_lines;
  if (s == "proj-lines") return ObjectKind::proj_lines;
  if (s == "punctured-lines") return ObjectKind::punctured_lines;
  if (s == "polylines") return ObjectKind::polylines;
  if (s == "two-segments") return ObjectKind::two_segments;
  return std::nullopt;
}

GeomObject parse_object(const json& j, ObjectKind kind, std::size_t dim) {
  switch (kind) {
    case ObjectKind::segments:
      return parse_segment(j, dim);
    case ObjectKind::eucl_lines: {
      auto base = parse_rat_array(j.at("base"), 3);
      auto dir = parse_rat_array(j.at("dir"), 3);
      return EuclLine::from_base_dir(AffinePoint(base), std::array<Rat, 3>{dir[0], dir[1], dir[2]});
    }
    case ObjectKind::proj_lines: {
      auto p = parse_rat_array(j.at("plucker"), 6);
      return ProjLine(std::array<Rat, 6>{p[0], p[1], p[2], p[3], p[4], p[5]});
    }
    case ObjectKind::punctured_lines:
      return PuncturedLine(parse_rat(j.at("slope")), parse_rat(j.at("intercept")),
                           parse_point(j.at("hole"), 2));
    case ObjectKind::polylines: {
      if (!j.at("points").is_array()) throw invalid_input("dataset: polyline points");
      std::vector<AffinePoint> pts;
      for (const auto& p : j.at("points")) pts.push_back(parse_point(p, 2));
      return Polyline(std::move(pts));
    }
    case ObjectKind::two_segments:
      return TwoSegments(parse_segment(j.at("first"), 2), parse_segment(j.at("second"), 2));
  }
  throw invalid_input("dataset: unknown kind");
}

json object_json(const GeomObject& o) {
  switch (kind_of(o)) {
    case ObjectKind::segments:
      return segment_json(std::get<Segment>(o));
    case ObjectKind::eucl_lines: {
      const EuclLine& l = std::get<EuclLine>(o);
      json dir = json::array();
      for (const Int& d : l.dir()) dir.push_back(d.str());
      return json{{"base", point_json(l.base())}, {"dir", dir}};
    }
    case ObjectKind::proj_lines: {
      const ProjLine& l = std::get<ProjLine>(o);
      json p = json::array();
      for (const Int& v : l.p()) p.push_back(v.str());
      return json{{"plucker", p}};
    }
    case ObjectKind::punctured_lines: {
      const PuncturedLine& l = std::get<PuncturedLine>(o);
      return json{{"slope", rat_json(l.slope())},
                  {"intercept", rat_json(l.intercept())},
                  {"hole", point_json(l.hole())}};
    }
    case ObjectKind::polylines: {
      const Polyline& l = std::get<Polyline>(o);
      json pts = json::array();
      for (const AffinePoint& p : l.points()) pts.push_back(point_json(p));
      return json{{"points", pts}};
    }
    case ObjectKind::two_segments: {
      const TwoSegments& t = std::get<TwoSegments>(o);
      return json{{"first", segment_json(t.first())}, {"second", segment_json(t.second())}};
    }
  }
  throw internal_error("object_json: unknown kind");
}

}  // namespace

Dataset dataset_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("dataset: malformed JSON: ") + e.what());
  }
  Dataset ds;
  std::string space = j.value("space", "euclidean");
  if (space == "euclidean")
    ds.space = Space::euclidean;
  else if (space == "projective")
    ds.space = Space::projective;
  else
    throw invalid_input("dataset: unknown space '" + space + "'");
  auto kind = kind_from_string(j.value("kind", ""));
  if (!kind) throw invalid_input("dataset: unknown kind");
  ds.kind = *kind;
  ds.dim = j.value("dim", 2u);
  if (!j.contains("objects") || !j.at("objects").is_array())
    throw invalid_input("dataset: missing objects array");
  try {
    for (const auto& obj : j.at("objects")) ds.objects.push_back(parse_object(obj, ds.kind, ds.dim));
    if (j.contains("planes"))
      for (const auto& p : j.at("planes")) ds.planes.push_back(parse_hom_plane(p));
  } catch (const json::exception& e) {
    throw invalid_input(std::string("dataset: malformed object: ") + e.what());
  }
  if (j.contains("provenance")) ds.provenance = j.at("provenance").dump();
  return ds;
}

std::string dataset_to_json_text(const Dataset& ds) {
  json j;
  j["space"] = to_string(ds.space);
  j["kind"] = to_string(ds.kind);
  j["dim"] = ds.dim;
  j["objects"] = json::array();
  for (const GeomObject& o : ds.objects) j["objects"].push_back(object_json(o));
  if (!ds.planes.empty()) {
    j["planes"] = json::array();
    for (const HomPlane& p : ds.planes) j["planes"].push_back(hom_plane_json(p));
  }
  if (!ds.provenance.empty()) j["provenance"] = json::parse(ds.provenance);
  return j.dump(2);
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open dataset file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return dataset_from_json_text(buf.str());
}

void save_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write dataset file '" + path + "'");
  out << dataset_to_json_text(ds) << "\n";
}

namespace {

json class_witness_json(const ClassWitness& w) {
  if (const auto* p = std::get_if<WitnessPointed>(&w)) return json{{"pointed", hom_point_json(p->point)}};
  if (const auto* p = std::get_if<WitnessPlanar>(&w)) return json{{"planar", hom_plane_json(p->plane)}};
  if (const auto* p = std::get_if<WitnessPiercing>(&w)) return json{{"piercing", hom_point_json(p->point)}};
  if (const auto* p = std::get_if<WitnessBundle>(&w)) {
    json dir = json::array();
    for (const Int& d : p->dir) dir.push_back(d.str());
    return json{{"bundle", dir}};
  }
  const auto& a = std::get<WitnessAntichain>(w);
  return json{{"antichain", a.heights}};
}

ClassWitness parse_class_witness(const json& j) {
  if (j.contains("pointed")) return WitnessPointed{parse_hom_point(j.at("pointed"))};
  if (j.contains("planar")) return WitnessPlanar{parse_hom_plane(j.at("planar"))};
  if (j.contains("piercing")) return WitnessPiercing{parse_hom_point(j.at("piercing"))};
  if (j.contains("bundle")) {
    auto v = parse_rat_array(j.at("bundle"), 3);
    return WitnessBundle{canonicalize3(std::array<Rat, 3>{v[0], v[1], v[2]})};
  }
  if (j.contains("antichain")) {
    auto h = j.at("antichain").get<std::array<int, 4>>();
    return WitnessAntichain{h};
  }
  throw invalid_input("certificate: unknown class witness");
}

json clique_witness_json(const CliqueWitness& w) {
  if (const auto* p = std::get_if<CliqueChain>(&w)) return json{{"chain", to_string(p->order)}};
  if (std::holds_alternative<CliqueSkew>(w)) return json{{"skew", true}};
  if (const auto* p = std::get_if<CliqueBundle>(&w)) {
    json dir = json::array();
    for (const Int& d : p->dir) dir.push_back(d.str());
    return json{{"bundle", dir}};
  }
  return json{{"disjoint", true}};
}

CliqueWitness parse_clique_witness(const json& j) {
  if (j.contains("chain")) {
    auto o = order_from_string(j.at("chain").get<std::string>());
    if (!o) throw invalid_input("certificate: unknown order id");
    return CliqueChain{*o};
  }
  if (j.contains("skew")) return CliqueSkew{};
  if (j.contains("bundle")) {
    auto v = parse_rat_array(j.at("bundle"), 3);
    return CliqueBundle{canonicalize3(std::array<Rat, 3>{v[0], v[1], v[2]})};
  }
  if (j.contains("disjoint")) return CliqueDisjoint{};
  throw invalid_input("certificate: unknown clique witness");
}

}  // namespace

Certificate certificate_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input(std::string("certificate: malformed JSON: ") + e.what());
  }
  Certificate cert;
  auto mode = cert_mode_from_string(j.value("mode", ""));
  if (!mode) throw invalid_input("certificate: unknown mode");
  cert.mode = *mode;
  try {
    cert.colors = j.at("colors").get<std::vector<int>>();
    cert.clique = j.at("clique").get<std::vector<int>>();
    cert.bound = j.at("bound").get<std::string>();
    for (const auto& cls : j.at("classes"))
      cert.classes.push_back({parse_class_witness(cls.at("witness"))});
    if (j.contains("clique_witness")) cert.clique_witness = parse_clique_witness(j.at("clique_witness"));
    if (j.contains("shear")) cert.shear = parse_rat(j.at("shear"));
    if (j.contains("planes"))
      for (const auto& p : j.at("planes")) cert.planes.push_back(parse_hom_plane(p));
  } catch (const json::exception& e) {
    throw invalid_input(std::string("certificate: malformed field: ") + e.what());
  }
  return cert;
}

std::string certificate_to_json_text(const Certificate& cert) {
  json j;
  j["mode"] = to_string(cert.mode);
  j["colors"] = cert.colors;
  j["clique"] = cert.clique;
  j["bound"] = cert.bound;
  j["classes"] = json::array();
  for (const ColorClassInfo& info : cert.classes)
    j["classes"].push_back(json{{"witness", class_witness_json(info.witness)}});
  j["clique_witness"] = clique_witness_json(cert.clique_witness);
  if (cert.shear) j["shear"] = rat_json(*cert.shear);
  if (!cert.planes.empty()) {
    j["planes"] = json::array();
    for (const HomPlane& p : cert.planes) j["planes"].push_back(hom_plane_json(p));
  }
  return j.dump(2);
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open certificate file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return certificate_from_json_text(buf.str());
}

void save_certificate(const Certificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write certificate file '" + path + "'");
  out << certificate_to_json_text(cert) << "\n";
}

namespace {

double approx(const Rat& r) {
  return rat_num(r).convert_to<double>() / rat_den(r).convert_to<double>();
}

struct BBox {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool any = false;
  void add(double x, double y) {
    if (!any) {
      xmin = xmax = x;
      ymin = ymax = y;
      any = true;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
};

}  // namespace

std::string render_svg(const Dataset& ds) {
  const bool ok_kind = ds.kind == ObjectKind::segments || ds.kind == ObjectKind::polylines ||
                       ds.kind == ObjectKind::two_segments ||
                       ds.kind == ObjectKind::punctured_lines;
  if (!ok_kind || (ds.kind == ObjectKind::segments && ds.dim != 2))
    throw invalid_input("render_svg: only 2D object kinds can be drawn");

  BBox box;
  auto add_pt = [&](const AffinePoint& p) { box.add(approx(p[0]), approx(p[1])); };
  for (const GeomObject& o : ds.objects) {
    switch (ds.kind) {
      case ObjectKind::segments:
        add_pt(std::get<Segment>(o).a());
        add_pt(std::get<Segment>(o).b());
        break;
      case ObjectKind::polylines:
        for (const AffinePoint& p : std::get<Polyline>(o).points()) add_pt(p);
        break;
      case ObjectKind::two_segments:
        for (const Segment* s : {&std::get<TwoSegments>(o).first(), &std::get<TwoSegments>(o).second()}) {
          add_pt(s->a());
          add_pt(s->b());
        }
        break;
      default:
        add_pt(std::get<PuncturedLine>(o).hole());
        break;
    }
  }
  if (!box.any) box.add(0, 0);
  double w = box.xmax - box.xmin, h = box.ymax - box.ymin;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  double margin = 0.05 * std::max(w, h);
  box.xmin -= margin;
  box.xmax += margin;
  box.ymin -= margin;
  box.ymax += margin;
  w = box.xmax - box.xmin;
  h = box.ymax - box.ymin;
  const double scale = 800.0 / std::max(w, h);
  auto X = [&](double x) { return (x - box.xmin) * scale; };
  auto Y = [&](double y) { return (box.ymax - y) * scale; };  // flip y

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\""
      << h * scale << "\" viewBox=\"0 0 " << w * scale << " " << h * scale << "\">\n";
  double stroke = std::max(1.0, 0.002 * 800.0);
  auto line = [&](double x1, double y1, double x2, double y2) {
    svg << "  <line x1=\"" << X(x1) << "\" y1=\"" << Y(y1) << "\" x2=\"" << X(x2) << "\" y2=\""
        << Y(y2) << "\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
  };
  for (const GeomObject& o : ds.objects) {
    switch (ds.kind) {
      case ObjectKind::segments: {
        const Segment& s = std::get<Segment>(o);
        line(approx(s.a()[0]), approx(s.a()[1]), approx(s.b()[0]), approx(s.b()[1]));
        break;
      }
      case ObjectKind::polylines: {
        const Polyline& p = std::get<Polyline>(o);
        for (const Segment& s : p.segments())
          line(approx(s.a()[0]), approx(s.a()[1]), approx(s.b()[0]), approx(s.b()[1]));
        break;
      }
      case ObjectKind::two_segments: {
        const TwoSegments& t = std::get<TwoSegments>(o);
        for (const Segment* s : {&t.first(), &t.second()})
          line(approx(s->a()[0]), approx(s->a()[1]), approx(s->b()[0]), approx(s->b()[1]));
        break;
      }
      default: {
        const PuncturedLine& l = std::get<PuncturedLine>(o);
        double m = approx(l.slope()), b = approx(l.intercept());
        line(box.xmin, m * box.xmin + b, box.xmax, m * box.xmax + b);
        svg << "  <circle cx=\"" << X(approx(l.hole()[0])) << "\" cy=\"" << Y(approx(l.hole()[1]))
            << "\" r=\"" << 3 * stroke << "\" fill=\"white\" stroke=\"black\" stroke-width=\""
            << stroke << "\"/>\n";
        break;
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace djg
