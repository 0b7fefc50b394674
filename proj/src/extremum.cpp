#include "trilin/extremum.hpp"

#include <algorithm>
#include <cmath>

#include "trilin/conjugate.hpp"
#include "trilin/error.hpp"
#include "trilin/tolerance.hpp"

namespace trilin {

WeightTriple::WeightTriple(double l, double m, double n) : WeightTriple(std::array<double, 3>{l, m, n}) {}

WeightTriple::WeightTriple(const std::array<double, 3>& w) : w_(w) {
  for (double v : w_) {
    if (!std::isfinite(v)) throw Error(Errc::InvalidWeights, "weights must be finite");
  }
  if (w_[0] == 0.0 && w_[1] == 0.0 && w_[2] == 0.0) throw Error(Errc::InvalidWeights, "weights must not all vanish");
}

double WeightTriple::scale() const { return std::max({std::abs(w_[0]), std::abs(w_[1]), std::abs(w_[2])}); }

int WeightTriple::sum_sign() const { return sign(sum(), scale()); }

bool WeightTriple::is_zero_at(int k) const { return is_zero(w_[k], scale()); }

int WeightTriple::zero_count() const {
  int count = 0;
  for (int k = 0; k < 3; ++k) count += is_zero_at(k) ? 1 : 0;
  return count;
}

int WeightTriple::negative_count() const {
  int count = 0;
  for (int k = 0; k < 3; ++k) count += (!is_zero_at(k) && w_[k] < 0.0) ? 1 : 0;
  return count;
}

WeightTriple scale_weights(const WeightTriple& w, double rho) {
  if (rho == 0.0 || !std::isfinite(rho)) throw Error(Errc::ZeroScale, "scale factor must be finite and nonzero");
  return WeightTriple(rho * w.l(), rho * w.m(), rho * w.n());
}

double eval_F(const Triangle&, const WeightTriple& w, const TriPoint& p) {
  return w.l() * p.x() * p.x() + w.m() * p.y() * p.y() + w.n() * p.z() * p.z();
}

const char* to_string(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::Min: return "Min";
    case ExtremumKind::Max: return "Max";
    case ExtremumKind::NoExtremum: return "NoExtremum";
    case ExtremumKind::DegenerateMinSet: return "DegenerateMinSet";
    case ExtremumKind::DegenerateMaxSet: return "DegenerateMaxSet";
  }
  return "?";
}

namespace {

BaryPoint vertex_point(int k) {
  std::array<double, 3> v{};
  v[k] = 1.0;
  return BaryPoint(v);
}

std::optional<RegionLabel> region_if_finite(const Triangle& t, const BaryPoint& p) {
  if (!p.is_finite()) return std::nullopt;
  return region_classify(t, p);
}

// Fills point, touch point, value and region of N for the tangency cases.
void attach_touch_point(const Triangle& t, const WeightTriple& w, double j, ExtremumResult& r) {
  const BaryPoint conj = isogonal(t, w.as_point());
  const double s2 = 2.0 * t.area();
  std::array<double, 3> touch{};
  for (int k = 0; k < 3; ++k) touch[k] = (s2 / j) * (t.side(k) / w[k]);
  const TriPoint tp(touch);
  const BaryPoint from_touch = tri_to_bary(t, tp);

  const double gap = canonical_distance(conj, from_touch);
  if (gap > 1e-9) {
    throw Error(Errc::VerificationFailed,
                "isogonal conjugate and touch point disagree by " + std::to_string(gap));
  }
  r.value = s2 * s2 / j;
  r.point = conj;
  r.point_tri = tp;
  r.region_N = region_if_finite(t, conj);

  const double at_touch = eval_F(t, w, tp);
  if (std::abs(at_touch - *r.value) > 1e-9 * std::max(1.0, std::abs(*r.value))) {
    r.diagnostics.push_back("F at touch point deviates from 4S^2/J by " + std::to_string(at_touch - *r.value));
  }
}

ExtremumResult solve_one_zero(const WeightTriple& w, int zero_at) {
  ExtremumResult r;
  const double p = w[(zero_at + 1) % 3];
  const double q = w[(zero_at + 2) % 3];
  if (p > 0.0 && q > 0.0) {
    r.kind = ExtremumKind::Min;
    r.case_label = "4.1";
  } else if (p < 0.0 && q < 0.0) {
    r.kind = ExtremumKind::Max;
    r.case_label = "4.2";
  } else {
    r.kind = ExtremumKind::NoExtremum;
    r.case_label = "4.3";
    return r;
  }
  r.value = 0.0;
  r.point = vertex_point(zero_at);
  r.region_N = RegionLabel{RegionTag::Vertex, zero_at};
  return r;
}

ExtremumResult solve_two_zeros(const WeightTriple& w, int nonzero_at) {
  ExtremumResult r;
  const bool positive = w[nonzero_at] > 0.0;
  r.kind = positive ? ExtremumKind::DegenerateMinSet : ExtremumKind::DegenerateMaxSet;
  r.case_label = positive ? "5.1" : "5.2";
  r.value = 0.0;
  r.set_side = nonzero_at;
  return r;
}

}  // namespace

ExtremumResult solve_extremum(const Triangle& t, const WeightTriple& w) {
  const int zeros = w.zero_count();
  if (zeros == 2) {
    int nonzero_at = 0;
    for (int k = 0; k < 3; ++k) {
      if (!w.is_zero_at(k)) nonzero_at = k;
    }
    auto r = solve_two_zeros(w, nonzero_at);
    r.region_M = RegionLabel{RegionTag::Vertex, nonzero_at};
    return r;
  }
  if (zeros == 1) {
    int zero_at = 0;
    for (int k = 0; k < 3; ++k) {
      if (w.is_zero_at(k)) zero_at = k;
    }
    // Snap the vanishing weight so M is evaluated exactly on its sideline.
    std::array<double, 3> snapped = w.values();
    snapped[zero_at] = 0.0;
    auto r = solve_one_zero(WeightTriple(snapped), zero_at);
    r.region_M = region_if_finite(t, BaryPoint(snapped));
    return r;
  }

  ExtremumResult r;
  const BaryPoint m = w.as_point();
  const double j = compute_J(t, m);
  const int j_sign = sign(j, J_scale(t, m));
  const int negatives = w.negative_count();
  r.J = j;
  r.region_M = region_if_finite(t, m);

  switch (w.sum_sign()) {
    case 0: {
      const double product = w.l() * w.m() * w.n();
      r.kind = ExtremumKind::NoExtremum;
      r.case_label = product < 0.0 ? "3.1" : "3.2";
      r.region_N = region_if_finite(t, isogonal(t, m));
      return r;
    }
    case 1:
      if (negatives == 0) {
        r.kind = ExtremumKind::Min;
        r.case_label = "1.1";
      } else if (negatives == 1) {
        r.case_label = "1.2";
        r.kind = j_sign < 0 ? ExtremumKind::Min : ExtremumKind::NoExtremum;
      } else {
        r.kind = ExtremumKind::NoExtremum;
        r.case_label = "1.3";
      }
      break;
    default:
      if (negatives == 3) {
        r.kind = ExtremumKind::Max;
        r.case_label = "2.1";
      } else if (negatives == 2) {
        if (j_sign > 0) {
          r.kind = ExtremumKind::Max;
          r.case_label = "2.2.2";
        } else {
          r.kind = ExtremumKind::NoExtremum;
          r.case_label = "2.2.1";
        }
      } else {
        r.kind = ExtremumKind::NoExtremum;
        r.case_label = "2.3";
      }
      break;
  }

  if (r.kind == ExtremumKind::Min || r.kind == ExtremumKind::Max) {
    attach_touch_point(t, w, j, r);
  } else if (j_sign != 0) {
    r.region_N = region_if_finite(t, isogonal(t, m));
  }
  return r;
}

MassVectorIdentity mass_vector_identity(const Triangle& t, const WeightTriple& w) {
  if (w.zero_count() > 0) throw Error(Errc::ZeroCoordinate, "mass-point identity needs nonzero weights");
  if (w.sum_sign() != 0) throw Error(Errc::SumNotZero, "mass-point identity needs l + m + n = 0");
  const Vec2 a = t.vertex(0);
  const Vec2 v = w.m() * (t.vertex(1) - a) + w.n() * (t.vertex(2) - a);
  return {dot(v, v), -w.l() * w.m() * w.n() * compute_J(t, w.as_point())};
}

}  // namespace trilin
