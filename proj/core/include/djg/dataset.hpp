#pragma once

#include <string>
#include <vector>

#include "djg/certificate.hpp"
#include "djg/objects.hpp"

namespace djg {

// On-disk dataset: homogeneous objects plus the space they live in.
// Rationals serialize as "p/q" (reduced, q > 0) or "p".
struct Dataset {
  Space space = Space::euclidean;
  ObjectKind kind = ObjectKind::segments;
  std::size_t dim = 2;  // segment coordinates per point
  std::vector<GeomObject> objects;
  std::vector<HomPlane> planes;  // optional; consumed by segments-kplanes
  std::string provenance;        // opaque JSON blob, may be empty
};

Dataset dataset_from_json_text(const std::string& text);
std::string dataset_to_json_text(const Dataset& ds);
Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& ds, const std::string& path);

Certificate certificate_from_json_text(const std::string& text);
std::string certificate_to_json_text(const Certificate& cert);
Certificate load_certificate(const std::string& path);
void save_certificate(const Certificate& cert, const std::string& path);

// 2D object kinds only; decimal coordinates are display-only.
std::string render_svg(const Dataset& ds);

}  // namespace djg
