#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "djg/color_lines.hpp"
#include "djg/color_planar.hpp"
#include "djg/color_segments3d.hpp"
#include "djg/dataset.hpp"
#include "djg/errors.hpp"
#include "djg/generators.hpp"
#include "djg/maps.hpp"
#include "djg/oracles.hpp"

using namespace djg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInternal = 2;
constexpr int kExitBadInput = 3;

struct GlobalOpts {
  std::uint64_t seed = 20250801;
  std::string format = "text";
};

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "-";
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void emit_report(const GlobalOpts& g, const json& rep, const std::string& report_path) {
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw invalid_input("cannot write report file '" + report_path + "'");
    out << rep.dump(2) << "\n";
  }
  if (g.format == "json") {
    std::cout << rep.dump(2) << "\n";
    return;
  }
  for (auto it = rep.begin(); it != rep.end(); ++it) {
    if (it.value().is_structured())
      std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
    else
      std::cout << "  " << it.key() << ": " << (it.value().is_string()
                                                    ? it.value().get<std::string>()
                                                    : it.value().dump())
                << "\n";
  }
}

std::vector<EuclLine> eucl_lines_of(const Dataset& ds) {
  std::vector<EuclLine> out;
  for (const GeomObject& o : ds.objects) out.push_back(std::get<EuclLine>(o));
  return out;
}

std::vector<ProjLine> proj_lines_of(const Dataset& ds) {
  std::vector<ProjLine> out;
  if (ds.kind == ObjectKind::proj_lines) {
    for (const GeomObject& o : ds.objects) out.push_back(std::get<ProjLine>(o));
  } else if (ds.kind == ObjectKind::eucl_lines) {
    for (const GeomObject& o : ds.objects) out.push_back(std::get<EuclLine>(o).plucker());
  } else {
    throw invalid_input("dataset does not hold lines");
  }
  return out;
}

std::vector<Segment> segments_of(const Dataset& ds) {
  std::vector<Segment> out;
  for (const GeomObject& o : ds.objects) out.push_back(std::get<Segment>(o));
  return out;
}

// Graph the certificate is checked against; the space follows the mode.
DGraph graph_for_mode(const Dataset& ds, CertMode mode) {
  if (mode == CertMode::lines_projective) {
    auto lines = proj_lines_of(ds);
    std::vector<GeomObject> objs(lines.begin(), lines.end());
    return build_graph(std::move(objs), Mode::disjointness, Space::projective);
  }
  return build_graph(ds.objects, Mode::disjointness, Space::euclidean);
}

json verification_json(const VerifyReport& rep) {
  return json{{"proper", rep.proper},
              {"clique_ok", rep.clique_ok},
              {"bound_ok", rep.bound_ok},
              {"class_witness_ok", rep.class_witness_ok},
              {"detail", rep.detail}};
}

int run_generate(const GlobalOpts& g, const std::string& kind, int m, int k, int d,
                 const std::string& graph_file, const std::string& preset,
                 const std::string& output) {
  std::mt19937_64 rng(g.seed);
  Dataset ds;
  json params;
  if (kind == "shift-pointed") {
    auto objs = gen_shift_pointed_lines(m);
    ds.kind = ObjectKind::punctured_lines;
    ds.objects.assign(objs.begin(), objs.end());
    params["m"] = m;
  } else if (kind == "shift-two-segments") {
    auto objs = gen_shift_two_segments(m);
    ds.kind = ObjectKind::two_segments;
    ds.objects.assign(objs.begin(), objs.end());
    params["m"] = m;
  } else if (kind == "shift-polyline") {
    auto objs = gen_shift_polyline(m);
    ds.kind = ObjectKind::polylines;
    ds.objects.assign(objs.begin(), objs.end());
    params["m"] = m;
  } else if (kind == "kneser") {
    auto objs = gen_kneser_lines(k);
    ds.kind = ObjectKind::eucl_lines;
    ds.dim = 3;
    ds.objects.assign(objs.begin(), objs.end());
    params["k"] = k;
  } else if (kind == "hales-jewett") {
    auto objs = gen_hales_jewett_lines(m, d, rng);
    ds.kind = ObjectKind::eucl_lines;
    ds.dim = 3;
    ds.objects.assign(objs.begin(), objs.end());
    params["m"] = m;
    params["d"] = d;
  } else if (kind == "linegraph") {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;
    if (!graph_file.empty()) {
      std::ifstream in(graph_file);
      if (!in) throw invalid_input("cannot open graph file '" + graph_file + "'");
      json gspec = json::parse(in, nullptr, false);
      if (gspec.is_discarded()) throw invalid_input("malformed graph file");
      nv = gspec.at("n").get<int>();
      for (const auto& e : gspec.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      params["graph_file"] = graph_file;
    } else if (preset == "k4") {
      nv = 4;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    } else if (preset == "star3") {
      nv = 4;
      edges = {{0, 1}, {0, 2}, {0, 3}};
    } else if (preset == "path3") {
      nv = 3;
      edges = {{0, 1}, {1, 2}};
    } else {
      throw invalid_input("linegraph needs --graph-file or --preset k4|star3|path3");
    }
    auto objs = gen_linegraph_lines(nv, edges);
    ds.kind = ObjectKind::eucl_lines;
    ds.dim = 3;
    ds.objects.assign(objs.begin(), objs.end());
    params["preset"] = preset;
  } else {
    throw invalid_input("unknown generator kind '" + kind + "'");
  }
  json prov{{"construction", kind}, {"params", params}, {"verified", true}, {"seed", g.seed}};
  ds.provenance = prov.dump();
  save_dataset(ds, output);
  json rep{{"command", "generate"},
           {"kind", kind},
           {"n", ds.objects.size()},
           {"output", output},
           {"verified", true}};
  emit_report(g, rep, "");
  return kExitOk;
}

int run_color(const GlobalOpts& g, const std::string& input, const std::string& mode_str,
              const std::string& output, const std::string& report_path) {
  auto mode = cert_mode_from_string(mode_str);
  if (!mode) throw invalid_input("unknown mode '" + mode_str + "'");
  Dataset ds = load_dataset(input);
  std::mt19937_64 rng(g.seed);
  auto t0 = std::chrono::steady_clock::now();

  Certificate cert;
  Dataset effective = ds;  // segments may be replaced by a verified projection
  std::string projected_note;
  switch (*mode) {
    case CertMode::planar_segments: {
      if (ds.kind != ObjectKind::segments || ds.dim != 2)
        throw invalid_input("planar-segments needs a 2D segment dataset");
      cert = color_planar_segments(segments_of(ds), rng);
      break;
    }
    case CertMode::segments_3d: {
      if (ds.kind != ObjectKind::segments || ds.dim < 3)
        throw invalid_input("segments-3d needs a segment dataset of dimension >= 3");
      std::vector<Segment> segs = segments_of(ds);
      if (ds.dim > 3) {
        ProjectionResult pr = generic_project_3d(segs, rng);
        segs = pr.segments;
        effective.dim = 3;
        effective.objects.assign(segs.begin(), segs.end());
        projected_note = output + ".projected.json";
        save_dataset(effective, projected_note);
      }
      cert = color_segments_3d(segs, rng);
      break;
    }
    case CertMode::segments_kplanes: {
      if (ds.kind != ObjectKind::segments || ds.dim != 3)
        throw invalid_input("segments-kplanes needs a 3D segment dataset");
      if (ds.planes.empty())
        throw invalid_input("segments-kplanes needs a dataset with a 'planes' list");
      cert = color_segments_kplanes(segments_of(ds), ds.planes, rng);
      break;
    }
    case CertMode::lines_euclidean: {
      if (ds.kind != ObjectKind::eucl_lines)
        throw invalid_input("lines-euclidean needs a euclidean line dataset");
      cert = color_euclidean_lines(eucl_lines_of(ds));
      break;
    }
    case CertMode::lines_projective: {
      cert = color_projective_lines(proj_lines_of(ds));
      break;
    }
  }
  double color_ms = ms_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  DGraph graph = graph_for_mode(effective, *mode);
  VerifyReport rep = verify_certificate(graph, cert);
  double verify_ms = ms_since(t1);

  save_certificate(cert, output);
  Int bound_value = eval_bound(cert.bound, cert.clique.size(), cert.planes.size());
  json out{{"command", "color"},
           {"input", input},
           {"digest", file_digest(input)},
           {"mode", mode_str},
           {"n", graph.size()},
           {"colors", cert.num_colors()},
           {"clique", cert.clique.size()},
           {"bound", cert.bound},
           {"bound_value", bound_value.str()},
           {"bound_satisfied", rep.bound_ok},
           {"verification", verification_json(rep)},
           {"certificate", output},
           {"timings_ms", json{{"color", color_ms}, {"verify", verify_ms}}}};
  if (!projected_note.empty()) out["projected_dataset"] = projected_note;
  emit_report(g, out, report_path);
  return rep.ok() ? kExitOk : kExitVerifyFailed;
}

int run_verify(const GlobalOpts& g, const std::string& input, const std::string& cert_path,
               const std::string& report_path) {
  Dataset ds = load_dataset(input);
  Certificate cert = load_certificate(cert_path);
  DGraph graph = graph_for_mode(ds, cert.mode);
  VerifyReport rep = verify_certificate(graph, cert);
  json out{{"command", "verify"},
           {"input", input},
           {"digest", file_digest(input)},
           {"certificate", cert_path},
           {"mode", to_string(cert.mode)},
           {"n", graph.size()},
           {"colors", cert.num_colors()},
           {"clique", cert.clique.size()},
           {"bound", cert.bound},
           {"verification", verification_json(rep)}};
  emit_report(g, out, report_path);
  return rep.ok() ? kExitOk : kExitVerifyFailed;
}

int run_oracle(const GlobalOpts& g, const std::string& input, const std::string& which,
               std::size_t cap, std::size_t kk, const std::string& report_path) {
  Dataset ds = load_dataset(input);
  json out{{"command", "oracle"}, {"input", input}, {"which", which}};
  if (which == "omega-lines") {
    OmegaLinesResult r = omega_intersection_lines(proj_lines_of(ds));
    out["value"] = r.omega;
    if (r.witness) {
      out["witness"] =
          json{{"kind", r.witness->kind == MaximalCliqueWitness::Kind::point ? "point" : "plane"},
               {"members", r.witness->members}};
    }
  } else if (which == "cover") {
    auto cover = clique_cover_at_most_k(proj_lines_of(ds), kk);
    out["k"] = kk;
    out["value"] = cover.has_value();
    if (cover) {
      json parts = json::array();
      for (const auto& w : *cover)
        parts.push_back(json{
            {"kind", w.kind == MaximalCliqueWitness::Kind::point ? "point" : "plane"},
            {"members", w.members}});
      out["witness"] = parts;
    }
  } else {
    Space space = ds.space;
    if (ds.kind == ObjectKind::proj_lines) space = Space::projective;
    DGraph graph = build_graph(ds.objects, Mode::disjointness, space);
    if (which == "chromatic") {
      OracleColoring r = exact_chromatic(graph, cap ? cap : 40);
      out["value"] = r.chi;
      out["witness"] = r.colors;
    } else if (which == "clique") {
      OracleSet r = exact_clique(graph, cap ? cap : 60);
      out["value"] = r.value;
      out["witness"] = r.members;
    } else if (which == "independence") {
      OracleSet r = exact_independence(graph, cap ? cap : 60);
      out["value"] = r.value;
      out["witness"] = r.members;
    } else if (which == "triangle-free") {
      out["value"] = is_triangle_free(graph);
    } else {
      throw invalid_input("unknown oracle '" + which + "'");
    }
  }
  emit_report(g, out, report_path);
  return kExitOk;
}

int run_ramsey(const GlobalOpts& g, const std::string& input, const std::string& report_path) {
  Dataset ds = load_dataset(input);
  std::mt19937_64 rng(g.seed);
  Certificate cert;
  Dataset effective = ds;
  CertMode mode;
  if (ds.kind == ObjectKind::segments && ds.dim == 2) {
    mode = CertMode::planar_segments;
    cert = color_planar_segments(segments_of(ds), rng);
  } else if (ds.kind == ObjectKind::segments) {
    mode = CertMode::segments_3d;
    std::vector<Segment> segs = segments_of(ds);
    if (ds.dim > 3) {
      segs = generic_project_3d(segs, rng).segments;
      effective.dim = 3;
      effective.objects.assign(segs.begin(), segs.end());
    }
    cert = color_segments_3d(segs, rng);
  } else if (ds.kind == ObjectKind::eucl_lines) {
    mode = CertMode::lines_euclidean;
    cert = color_euclidean_lines(eucl_lines_of(ds));
  } else if (ds.kind == ObjectKind::proj_lines) {
    mode = CertMode::lines_projective;
    cert = color_projective_lines(proj_lines_of(ds));
  } else {
    throw invalid_input("ramsey needs segments or lines");
  }
  DGraph graph = graph_for_mode(effective, mode);
  RamseyWitness w = extract_ramsey_witness(graph, cert);
  std::size_t largest_class = 0;
  {
    std::vector<std::size_t> sizes(cert.num_colors(), 0);
    for (int c : cert.colors) largest_class = std::max(largest_class, ++sizes[static_cast<std::size_t>(c)]);
  }
  bool pigeonhole = Int(graph.size()) <= Int(cert.num_colors()) * Int(largest_class);
  json out{{"command", "ramsey"},
           {"input", input},
           {"mode", to_string(mode)},
           {"n", graph.size()},
           {"witness_kind", w.is_clique ? "clique" : "independent-set"},
           {"witness_size", w.members.size()},
           {"witness", w.members},
           {"colors", cert.num_colors()},
           {"largest_class", largest_class},
           {"n_le_colors_times_largest", pigeonhole}};
  emit_report(g, out, report_path);
  return pigeonhole ? kExitOk : kExitInternal;
}

int run_render(const GlobalOpts& g, const std::string& input, const std::string& output) {
  Dataset ds = load_dataset(input);
  std::string svg = render_svg(ds);
  std::ofstream out(output);
  if (!out) throw invalid_input("cannot write '" + output + "'");
  out << svg;
  json rep{{"command", "render"}, {"input", input}, {"output", output}};
  emit_report(g, rep, "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified colorings of disjointness graphs of segments and lines"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for all randomized genericity choices");
  app.add_option("--format", g.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* generate = app.add_subcommand("generate", "emit a verified construction dataset");
  std::string gen_kind, gen_graph_file, gen_preset, gen_output;
  int gen_m = 4, gen_k = 2, gen_d = 2;
  generate->add_option("kind", gen_kind,
                       "shift-pointed | shift-two-segments | shift-polyline | kneser | "
                       "hales-jewett | linegraph")
      ->required();
  generate->add_option("--m", gen_m, "shift/hales-jewett size parameter");
  generate->add_option("--k", gen_k, "kneser parameter");
  generate->add_option("--d", gen_d, "hales-jewett dimension");
  generate->add_option("--graph-file", gen_graph_file, "linegraph: JSON {n, edges:[[u,v],...]}");
  generate->add_option("--preset", gen_preset, "linegraph: k4 | star3 | path3");
  generate->add_option("--output", gen_output, "dataset file to write")->required();

  auto* color = app.add_subcommand("color", "color a dataset with a certified bound");
  std::string col_input, col_mode, col_output, col_report;
  color->add_option("--input", col_input)->required();
  color->add_option("--mode", col_mode,
                    "planar-segments | segments-3d | segments-kplanes | lines-euclidean | "
                    "lines-projective")
      ->required();
  color->add_option("--output", col_output, "certificate file to write")->required();
  color->add_option("--report", col_report, "write the JSON run report here");

  auto* verify = app.add_subcommand("verify", "re-verify a certificate against a dataset");
  std::string ver_input, ver_cert, ver_report;
  verify->add_option("--input", ver_input)->required();
  verify->add_option("--certificate", ver_cert)->required();
  verify->add_option("--report", ver_report);

  auto* oracle = app.add_subcommand("oracle", "exact small-instance ground truth");
  std::string ora_input, ora_which, ora_report;
  std::size_t ora_cap = 0, ora_k = 2;
  oracle->add_option("--input", ora_input)->required();
  oracle->add_option("--which", ora_which,
                     "chromatic | clique | independence | triangle-free | omega-lines | cover")
      ->required();
  oracle->add_option("--cap", ora_cap, "instance size cap override");
  oracle->add_option("--k", ora_k, "cover size for --which cover");
  oracle->add_option("--report", ora_report);

  auto* ramsey = app.add_subcommand("ramsey", "extract a clique or independent-set witness");
  std::string ram_input, ram_report;
  ramsey->add_option("--input", ram_input)->required();
  ramsey->add_option("--report", ram_report);

  auto* render = app.add_subcommand("render", "draw a 2D dataset as SVG");
  std::string ren_input, ren_output;
  render->add_option("--input", ren_input)->required();
  render->add_option("--output", ren_output)->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return run_generate(g, gen_kind, gen_m, gen_k, gen_d, gen_graph_file, gen_preset,
                          gen_output);
    if (color->parsed()) return run_color(g, col_input, col_mode, col_output, col_report);
    if (verify->parsed()) return run_verify(g, ver_input, ver_cert, ver_report);
    if (oracle->parsed()) return run_oracle(g, ora_input, ora_which, ora_cap, ora_k, ora_report);
    if (ramsey->parsed()) return run_ramsey(g, ram_input, ram_report);
    if (render->parsed()) return run_render(g, ren_input, ren_output);
  } catch (const internal_error& e) {
    std::cerr << "internal assertion failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
