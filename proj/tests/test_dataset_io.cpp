#include <doctest.h>

#include "djg/color_planar.hpp"
#include "djg/color_segments3d.hpp"
#include "djg/dataset.hpp"
#include "djg/errors.hpp"
#include "djg/generators.hpp"
#include "support.hpp"

using namespace djg;
using namespace djg::test;

TEST_CASE("dataset json round trip per kind") {
  auto roundtrip = [](const Dataset& ds) {
    std::string text = dataset_to_json_text(ds);
    Dataset back = dataset_from_json_text(text);
    CHECK(back.space == ds.space);
    CHECK(back.kind == ds.kind);
    CHECK(back.dim == ds.dim);
    REQUIRE(back.objects.size() == ds.objects.size());
    for (std::size_t i = 0; i < ds.objects.size(); ++i) CHECK(back.objects[i] == ds.objects[i]);
    CHECK(back.planes == ds.planes);
    // serialization is canonical: a second pass is byte-identical
    CHECK(dataset_to_json_text(back) == text);
  };

  SUBCASE("segments") {
    Dataset ds;
    ds.kind = ObjectKind::segments;
    ds.dim = 2;
    ds.objects = {S2(0, 0, 1, 0), Segment(P2("1/2", "-3"), P2("2", "5/7"))};
    roundtrip(ds);
  }
  SUBCASE("3d segments with planes") {
    Dataset ds;
    ds.kind = ObjectKind::segments;
    ds.dim = 3;
    ds.objects = {S3(0, 0, 0, 1, 1, 1)};
    ds.planes = {HomPlane(std::array<Int, 4>{0, 0, 0, 1})};
    roundtrip(ds);
  }
  SUBCASE("euclidean lines") {
    Dataset ds;
    ds.kind = ObjectKind::eucl_lines;
    ds.dim = 3;
    ds.objects = {EuclLine::through(P3(0, 0, 0), P3(1, 2, 3))};
    roundtrip(ds);
  }
  SUBCASE("projective lines") {
    Dataset ds;
    ds.space = Space::projective;
    ds.kind = ObjectKind::proj_lines;
    ds.dim = 3;
    ds.objects = {supporting_line(S3(0, 0, 0, 1, 0, 0)).plucker()};
    roundtrip(ds);
  }
  SUBCASE("punctured lines, polylines, two-segments") {
    Dataset ds;
    ds.kind = ObjectKind::punctured_lines;
    auto lines = gen_shift_pointed_lines(3);
    ds.objects.assign(lines.begin(), lines.end());
    roundtrip(ds);

    Dataset dp;
    dp.kind = ObjectKind::polylines;
    auto polys = gen_shift_polyline(3);
    dp.objects.assign(polys.begin(), polys.end());
    roundtrip(dp);

    Dataset dt;
    dt.kind = ObjectKind::two_segments;
    auto twos = gen_shift_two_segments(3);
    dt.objects.assign(twos.begin(), twos.end());
    roundtrip(dt);
  }
  SUBCASE("malformed input is rejected") {
    CHECK_THROWS_AS(dataset_from_json_text("{"), invalid_input);
    CHECK_THROWS_AS(dataset_from_json_text("{\"kind\":\"nope\",\"objects\":[]}"), invalid_input);
    CHECK_THROWS_AS(dataset_from_json_text("{\"kind\":\"segments\"}"), invalid_input);
    CHECK_THROWS_AS(
        dataset_from_json_text(
            "{\"kind\":\"segments\",\"dim\":2,\"objects\":[{\"a\":[\"0\",\"0\"],\"b\":[\"x\"]}]}"),
        invalid_input);
  }
}

TEST_CASE("certificate json round trip") {
  std::mt19937_64 rng(101);
  SUBCASE("planar certificate with shear and antichain witnesses") {
    auto segs = random_segments(rng, 10, 2, 8);
    Certificate cert = color_planar_segments(segs, rng);
    Certificate back = certificate_from_json_text(certificate_to_json_text(cert));
    CHECK(back.mode == cert.mode);
    CHECK(back.colors == cert.colors);
    CHECK(back.clique == cert.clique);
    CHECK(back.bound == cert.bound);
    CHECK(back.shear == cert.shear);
    REQUIRE(back.classes.size() == cert.classes.size());
    std::vector<GeomObject> objs(segs.begin(), segs.end());
    DGraph g = build_graph(objs, Mode::disjointness, Space::euclidean);
    CHECK(verify_certificate(g, back).ok());
  }
  SUBCASE("3d certificate with mixed witnesses") {
    std::vector<Segment> segs = {S3(0, -1, 0, 0, 1, 0), S3(0, 0, -1, 0, 0, 2),
                                 S3(3, 0, -1, 3, 0, 1), S3(1, 1, 0, 2, 1, 0)};
    Certificate cert = color_segments_3d(segs, rng);
    Certificate back = certificate_from_json_text(certificate_to_json_text(cert));
    std::vector<GeomObject> objs(segs.begin(), segs.end());
    DGraph g = build_graph(objs, Mode::disjointness, Space::euclidean);
    CHECK(verify_certificate(g, back).ok());
    CHECK(certificate_to_json_text(back) == certificate_to_json_text(cert));
  }
}

TEST_CASE("svg rendering") {
  Dataset ds;
  ds.kind = ObjectKind::polylines;
  auto polys = gen_shift_polyline(3);
  ds.objects.assign(polys.begin(), polys.end());
  std::string svg = render_svg(ds);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);

  Dataset lines;
  lines.kind = ObjectKind::eucl_lines;
  lines.objects = {EuclLine::through(P3(0, 0, 0), P3(1, 0, 0))};
  CHECK_THROWS_AS(render_svg(lines), invalid_input);
}
