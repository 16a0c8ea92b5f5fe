#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "djg/graph.hpp"

namespace djg {

enum class CertMode {
  planar_segments,
  segments_3d,
  segments_kplanes,
  lines_euclidean,
  lines_projective,
};

std::string to_string(CertMode m);
std::optional<CertMode> cert_mode_from_string(const std::string& s);

// The four partial orders on nonvertical planar segments.
enum class OrderId { nest_below, nest_above, stag_below, stag_above };
inline constexpr std::array<OrderId, 4> kAllOrders = {OrderId::nest_below, OrderId::nest_above,
                                                      OrderId::stag_below, OrderId::stag_above};
std::string to_string(OrderId o);
std::optional<OrderId> order_from_string(const std::string& s);

// Per-color-class structural witnesses. Independence of a class follows from
// the properness check; the witness certifies how the class was formed and is
// revalidated geometrically without re-running the coloring algorithm.
struct WitnessPointed {
  HomPoint point;  // every member passes through it (possibly ideal, lines only)
};
struct WitnessPlanar {
  HomPlane plane;  // every member lies in it
};
struct WitnessPiercing {
  HomPoint point;  // every member segment contains it
};
struct WitnessBundle {
  std::array<Int, 3> dir;  // every member line has this direction
};
struct WitnessAntichain {
  std::array<int, 4> heights;  // members pairwise incomparable in all four orders
};
using ClassWitness =
    std::variant<WitnessPointed, WitnessPlanar, WitnessPiercing, WitnessBundle, WitnessAntichain>;

struct ColorClassInfo {
  ClassWitness witness;
};

// Witness for the reported clique.
struct CliqueChain {
  OrderId order;  // members pairwise comparable in this order (after shear)
};
struct CliqueSkew {};          // supporting/projective lines pairwise skew
struct CliqueBundle {
  std::array<Int, 3> dir;      // pairwise parallel lines
};
struct CliqueDisjoint {};      // generic: pairwise adjacency only
using CliqueWitness = std::variant<CliqueChain, CliqueSkew, CliqueBundle, CliqueDisjoint>;

// Proper coloring + witness clique + the claimed bound, all re-verifiable
// against the graph without rerunning any coloring algorithm.
struct Certificate {
  CertMode mode = CertMode::planar_segments;
  std::vector<int> colors;               // per vertex, dense ids 0..classes.size()-1
  std::vector<int> clique;               // vertex ids, pairwise adjacent
  std::string bound;                     // "k^4" | "k^2" | "k^3" | "k^4+k^3" | "(p-1)*k+k^4"
  std::vector<ColorClassInfo> classes;   // one entry per color id
  CliqueWitness clique_witness = CliqueDisjoint{};
  std::optional<Rat> shear;              // planar modes: the epsilon used
  std::vector<HomPlane> planes;          // segments-kplanes: the plane list ("p" in the bound)

  std::size_t num_colors() const { return classes.size(); }
};

// bound(k): k^4, k^2, k^3, k^4+k^3 or (p-1)*k + k^4 with p = planes_count.
Int eval_bound(const std::string& bound, std::size_t k, std::size_t planes_count);

struct VerifyReport {
  bool proper = false;
  bool clique_ok = false;
  bool bound_ok = false;
  bool class_witness_ok = false;
  std::string detail;  // first failure, empty when all green

  bool ok() const { return proper && clique_ok && bound_ok && class_witness_ok; }
};

VerifyReport verify_certificate(const DGraph& g, const Certificate& c);

struct RamseyWitness {
  bool is_clique = false;
  std::vector<int> members;
};

// The clique if it is at least as large as the biggest color class, else that
// class (independent by properness). Requires a verified certificate.
RamseyWitness extract_ramsey_witness(const DGraph& g, const Certificate& c);

}  // namespace djg
