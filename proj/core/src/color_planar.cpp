#include "djg/color_planar.hpp"

#include <algorithm>
#include <map>

#include "djg/errors.hpp"
#include "djg/maps.hpp"

namespace djg {

namespace {

// Cached view of a nonvertical segment as a linear function over [l, r].
struct LinSeg {
  Rat l, r, slope, icept;
};

LinSeg lin_of(const Segment& s) {
  if (s.dim() != 2) throw invalid_input("order_compare: segments must be 2D");
  Rat ax = s.a()[0], ay = s.a()[1], bx = s.b()[0], by = s.b()[1];
  if (ax == bx) throw invalid_input("order_compare: vertical segment");
  if (ax > bx) {
    std::swap(ax, bx);
    std::swap(ay, by);
  }
  LinSeg out;
  out.slope = (by - ay) / (bx - ax);
  out.icept = ay - out.slope * ax;
  out.l = std::move(ax);
  out.r = std::move(bx);
  return out;
}

constexpr OrderMask fwd(OrderId o) { return 1u << (2 * static_cast<unsigned>(o)); }
constexpr OrderMask bwd(OrderId o) { return 1u << (2 * static_cast<unsigned>(o) + 1); }

OrderMask mask_of(const LinSeg& s, const LinSeg& t) {
  const Rat& lo = s.l > t.l ? s.l : t.l;
  const Rat& hi = s.r < t.r ? s.r : t.r;
  if (lo > hi) {
    // x-ranges disjoint: both staggered orders apply.
    return s.r < t.l ? (fwd(OrderId::stag_below) | fwd(OrderId::stag_above))
                     : (bwd(OrderId::stag_below) | bwd(OrderId::stag_above));
  }
  // Disjoint linear graphs cannot swap order over the common x-range, so the
  // sign of t - s at the overlap endpoints decides everything.
  int s1 = sign((t.slope - s.slope) * lo + (t.icept - s.icept));
  int s2 = sign((t.slope - s.slope) * hi + (t.icept - s.icept));
  if (s1 == 0 || s2 == 0 || s1 != s2) return 0;  // the segments intersect
  const bool t_above = s1 > 0;
  if (s.l <= t.l && t.r <= s.r)  // s wider
    return t_above ? fwd(OrderId::nest_below) : fwd(OrderId::nest_above);
  if (t.l <= s.l && s.r <= t.r)  // t wider
    return t_above ? bwd(OrderId::nest_above) : bwd(OrderId::nest_below);
  if (s.l < t.l)  // staggered, s on the left
    return t_above ? fwd(OrderId::stag_below) : fwd(OrderId::stag_above);
  return t_above ? bwd(OrderId::stag_above) : bwd(OrderId::stag_below);
}

std::vector<std::vector<OrderMask>> mask_matrix(const std::vector<LinSeg>& lin) {
  const std::size_t n = lin.size();
  std::vector<std::vector<OrderMask>> m(n, std::vector<OrderMask>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      OrderMask mk = mask_of(lin[i], lin[j]);
      m[i][j] = mk;
      // Swap the direction bits for the mirrored pair.
      OrderMask sw = 0;
      for (unsigned b = 0; b < 4; ++b) {
        if (mk & (1u << (2 * b))) sw |= 1u << (2 * b + 1);
        if (mk & (1u << (2 * b + 1))) sw |= 1u << (2 * b);
      }
      m[j][i] = sw;
    }
  return m;
}

MirskyResult mirsky_from_masks(const std::vector<std::vector<OrderMask>>& m, OrderId ord) {
  const std::size_t n = m.size();
  auto before = [&](std::size_t u, std::size_t v) { return precedes(m[u][v], ord); };
  std::vector<int> indeg(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && before(u, v)) ++indeg[v];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  MirskyResult out;
  out.heights.assign(n, 1);
  std::vector<int> pred(n, -1);
  std::size_t processed = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t u = queue[qi];
    ++processed;
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || !before(u, v)) continue;
      if (out.heights[u] + 1 > out.heights[v]) {
        out.heights[v] = out.heights[u] + 1;
        pred[v] = static_cast<int>(u);
      }
      if (--indeg[v] == 0) queue.push_back(v);
    }
  }
  if (processed != n) throw internal_error("mirsky_decompose: comparability relation is cyclic");
  if (n > 0) {
    std::size_t best = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (out.heights[v] > out.heights[best]) best = v;
    for (int v = static_cast<int>(best); v >= 0; v = pred[static_cast<std::size_t>(v)])
      out.longest_chain.push_back(v);
    std::reverse(out.longest_chain.begin(), out.longest_chain.end());
  }
  return out;
}

}  // namespace

OrderMask order_compare(const Segment& s, const Segment& t) {
  return mask_of(lin_of(s), lin_of(t));
}

MirskyResult mirsky_decompose(const std::vector<Segment>& segs, OrderId ord) {
  std::vector<LinSeg> lin;
  lin.reserve(segs.size());
  for (const Segment& s : segs) lin.push_back(lin_of(s));
  return mirsky_from_masks(mask_matrix(lin), ord);
}

Certificate color_planar_segments(const std::vector<Segment>& segs, std::mt19937_64& rng) {
  Certificate cert;
  cert.mode = CertMode::planar_segments;
  cert.bound = "k^4";
  cert.shear = Rat(0);
  if (segs.empty()) return cert;

  ShearResult sheared = generic_shear_2d(segs, rng);
  cert.shear = sheared.epsilon;

  std::vector<LinSeg> lin;
  lin.reserve(sheared.segments.size());
  for (const Segment& s : sheared.segments) lin.push_back(lin_of(s));
  auto masks = mask_matrix(lin);

  std::array<MirskyResult, 4> per_order;
  for (OrderId o : kAllOrders)
    per_order[static_cast<std::size_t>(o)] = mirsky_from_masks(masks, o);

  const std::size_t n = segs.size();
  std::map<std::array<int, 4>, int> color_ids;
  cert.colors.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::array<int, 4> key;
    for (std::size_t o = 0; o < 4; ++o) key[o] = per_order[o].heights[v];
    auto [it, fresh] = color_ids.emplace(key, static_cast<int>(cert.classes.size()));
    if (fresh) cert.classes.push_back({WitnessAntichain{key}});
    cert.colors[v] = it->second;
  }

  std::size_t best_order = 0;
  for (std::size_t o = 1; o < 4; ++o)
    if (per_order[o].longest_chain.size() > per_order[best_order].longest_chain.size())
      best_order = o;
  cert.clique = per_order[best_order].longest_chain;
  cert.clique_witness = CliqueChain{static_cast<OrderId>(best_order)};

  Int k(cert.clique.size());
  if (Int(cert.classes.size()) > k * k * k * k)
    throw internal_error("color_planar_segments: color count exceeds |K|^4");
  return cert;
}

Certificate color_planar_segments(const std::vector<Segment>& segs) {
  std::mt19937_64 rng(0x5eed0001u);
  return color_planar_segments(segs, rng);
}

}  // namespace djg
