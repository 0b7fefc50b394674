#include "trilin/report.hpp"

#include "trilin/centers.hpp"
#include "trilin/error.hpp"
#include "trilin/tolerance.hpp"

namespace trilin {

InequalityReport inequality_report(const Triangle& t, const WeightTriple& weights, const BaryPoint& x) {
  const ExtremumResult r = solve_extremum(t, weights);
  if (r.kind != ExtremumKind::Min && r.kind != ExtremumKind::Max) {
    throw Error(Errc::NoBound, std::string("weights yield ") + to_string(r.kind) + " (case " + r.case_label + ")");
  }
  const double lhs = eval_F(t, weights, bary_to_tri(t, x));
  const double rhs = *r.value;
  return InequalityReport{
      .lhs = lhs,
      .rhs = rhs,
      .slack = r.kind == ExtremumKind::Min ? lhs - rhs : rhs - lhs,
      .tight = canonical_equal(x, *r.point, tolerance()),
      .M = weights.as_point(),
      .X = x,
      .N = *r.point,
      .kind = r.kind,
      .J = r.J,
      .case_label = r.case_label,
  };
}

CircumOrthoRecord circum_ortho_example(const Triangle& t) {
  const WeightTriple weights(double_angle_sines(t));
  ExtremumResult result = solve_extremum(t, weights);
  const double cos_product = t.cos_angle(0) * t.cos_angle(1) * t.cos_angle(2);
  const BaryPoint h = named_center(t, CenterName::Orthocenter);

  std::optional<double> j_closed;
  if (!is_zero(cos_product, 1.0)) j_closed = t.area() / cos_product;
  const std::string label = result.case_label;
  return CircumOrthoRecord{
      .weights = weights,
      .result = std::move(result),
      .J_closed_form = j_closed,
      .closed_form = 4.0 * t.area() * cos_product,
      .F_at_H = eval_F(t, weights, bary_to_tri(t, h)),
      .orthocenter = h,
      .case_label = label,
  };
}

}  // namespace trilin
