#include "trilin/regions.hpp"

#include <algorithm>
#include <cmath>

#include "trilin/error.hpp"
#include "trilin/tolerance.hpp"

namespace trilin {
namespace {

const char* tag_name(RegionTag tag) {
  switch (tag) {
    case RegionTag::InteriorSigma: return "InteriorSigma";
    case RegionTag::SideRegionInCircle: return "SideRegionInCircle";
    case RegionTag::OnArc: return "OnArc";
    case RegionTag::SideRegionOutsideCircle: return "SideRegionOutsideCircle";
    case RegionTag::VerticalRegion: return "VerticalRegion";
    case RegionTag::OnSideline: return "OnSideline";
    case RegionTag::Vertex: return "Vertex";
    case RegionTag::OnCircumcircleOther: return "OnCircumcircleOther";
  }
  return "?";
}

}  // namespace

std::string to_string(const RegionLabel& r) {
  std::string out = tag_name(r.tag);
  switch (r.tag) {
    case RegionTag::InteriorSigma:
    case RegionTag::OnCircumcircleOther:
      return out;
    case RegionTag::OnSideline:
      return out + "(" + side_name(r.index) + ")";
    default:
      return out + "(" + vertex_name(r.index) + ")";
  }
}

RegionLabel region_classify(const Triangle& t, const BaryPoint& p) {
  const auto w = p.normalized();
  const double scale = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])});
  int zeros = 0, negatives = 0;
  int zero_at = -1, neg_at = -1, pos_at = -1, nonzero_at = -1;
  for (int k = 0; k < 3; ++k) {
    const int s = sign(w[k], scale);
    if (s == 0) {
      ++zeros;
      zero_at = k;
    } else {
      nonzero_at = k;
      if (s < 0) {
        ++negatives;
        neg_at = k;
      } else {
        pos_at = k;
      }
    }
  }

  if (zeros >= 2) return {RegionTag::Vertex, nonzero_at};
  if (zeros == 1) return {RegionTag::OnSideline, zero_at};
  if (negatives == 0) return {RegionTag::InteriorSigma, 0};
  if (negatives == 1) {
    // The circle power is -l m n J (sum-normalized), and l m n < 0 here, so
    // J < 0 exactly inside the circumcircle.
    const BaryPoint q(w);
    switch (sign(compute_J(t, q), J_scale(t, q))) {
      case 1: return {RegionTag::SideRegionOutsideCircle, neg_at};
      case 0: return {RegionTag::OnArc, neg_at};
      default: return {RegionTag::SideRegionInCircle, neg_at};
    }
  }
  // Two negatives: the vertical angle at the positive coordinate's vertex,
  // where J < 0 holds for every point.
  const BaryPoint q(w);
  const int j_sign = sign(compute_J(t, q), J_scale(t, q));
  if (j_sign > 0) throw Error(Errc::VerificationFailed, "J > 0 in a vertical-angle region");
  if (j_sign == 0) return {RegionTag::OnCircumcircleOther, pos_at};
  return {RegionTag::VerticalRegion, pos_at};
}

}  // namespace trilin
