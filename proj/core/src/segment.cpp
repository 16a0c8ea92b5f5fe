#include "djg/segment.hpp"

#include "djg/errors.hpp"

namespace djg {

Segment::Segment(AffinePoint a, AffinePoint b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.dim() != b_.dim()) throw invalid_input("Segment: endpoint dimensions differ");
  if (a_ == b_) throw invalid_input("Segment: degenerate (a == b)");
}

}  // namespace djg
