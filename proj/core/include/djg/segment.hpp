#pragma once

#include "djg/point.hpp"

namespace djg {

// Closed segment {a + t(b-a) : 0 <= t <= 1} with distinct endpoints.
class Segment {
 public:
  Segment() = default;
  Segment(AffinePoint a, AffinePoint b);

  const AffinePoint& a() const { return a_; }
  const AffinePoint& b() const { return b_; }
  std::size_t dim() const { return a_.dim(); }

  bool operator==(const Segment&) const = default;

 private:
  AffinePoint a_, b_;
};

}  // namespace djg
