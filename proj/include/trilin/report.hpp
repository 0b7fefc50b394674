#pragma once

#include <optional>
#include <string>

#include "trilin/extremum.hpp"

namespace trilin {

/// One instance of F(X) >= 4S^2/J (or <= for maxima).
struct InequalityReport {
  double lhs = 0.0;    ///< F(X)
  double rhs = 0.0;    ///< the extremal value
  double slack = 0.0;  ///< lhs - rhs for minima, rhs - lhs for maxima
  bool tight = false;  ///< X coincides with the extremal point
  BaryPoint M;
  BaryPoint X;
  BaryPoint N;
  ExtremumKind kind = ExtremumKind::Min;
  std::optional<double> J;
  std::string case_label;
};

/// Throws NoBound unless the weights yield a Min or Max, PointAtInfinity for
/// an ideal X.
InequalityReport inequality_report(const Triangle& t, const WeightTriple& weights, const BaryPoint& x);

/// The circumcenter weights (sin 2A, sin 2B, sin 2C) and what they yield.
struct CircumOrthoRecord {
  WeightTriple weights;
  ExtremumResult result;
  /// S / (cos A cos B cos C), absent for right triangles.
  std::optional<double> J_closed_form;
  /// 4 S cos A cos B cos C.
  double closed_form = 0.0;
  /// F at the orthocenter.
  double F_at_H = 0.0;
  BaryPoint orthocenter;
  std::string case_label;
};

CircumOrthoRecord circum_ortho_example(const Triangle& t);

}  // namespace trilin
