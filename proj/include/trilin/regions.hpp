#pragma once

#include <string>

#include "trilin/coordinates.hpp"

namespace trilin {

// Plane regions relative to a reference vertex, bound to sign patterns of the
// sum-normalized barycentric coordinates:
//   InteriorSigma              all positive (triangle interior)
//   SideRegionInCircle(k)      only coordinate k negative, J < 0
//   OnArc(k)                   only coordinate k negative, J = 0
//   SideRegionOutsideCircle(k) only coordinate k negative, J > 0
//   VerticalRegion(k)          only coordinate k positive (J < 0 always)
//   OnSideline(k)              coordinate k zero, on side k (opposite vertex k)
//   Vertex(k)                  the vertex itself
//   OnCircumcircleOther        two-negative pattern with J within the
//                              tolerance band (numerically, near a vertex)
enum class RegionTag {
  InteriorSigma,
  SideRegionInCircle,
  OnArc,
  SideRegionOutsideCircle,
  VerticalRegion,
  OnSideline,
  Vertex,
  OnCircumcircleOther,
};

struct RegionLabel {
  RegionTag tag = RegionTag::InteriorSigma;
  /// Reference vertex (or, for OnSideline, the vertex opposite the side).
  int index = 0;

  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

/// "InteriorSigma", "SideRegionInCircle(A)", "OnSideline(BC)", ...
std::string to_string(const RegionLabel& r);

/// Throws PointAtInfinity.
RegionLabel region_classify(const Triangle& t, const BaryPoint& p);

}  // namespace trilin
