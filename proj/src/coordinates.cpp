#include "trilin/coordinates.hpp"

#include <algorithm>
#include <cmath>

#include "trilin/error.hpp"
#include "trilin/tolerance.hpp"

namespace trilin {

BaryPoint::BaryPoint(double l, double m, double n) : BaryPoint(std::array<double, 3>{l, m, n}) {}

BaryPoint::BaryPoint(const std::array<double, 3>& c) : c_(c) {
  for (double v : c_) {
    if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, "barycentric coordinates must be finite");
  }
  if (c_[0] == 0.0 && c_[1] == 0.0 && c_[2] == 0.0) {
    throw Error(Errc::InvalidArgument, "barycentric coordinates must not all vanish");
  }
}

double BaryPoint::scale() const { return std::max({std::abs(c_[0]), std::abs(c_[1]), std::abs(c_[2])}); }

PointClass BaryPoint::point_class() const {
  return is_zero(sum(), scale()) ? PointClass::AtInfinity : PointClass::Finite;
}

bool BaryPoint::is_zero_at(int k) const { return is_zero(c_[k], scale()); }

int BaryPoint::zero_count() const {
  int count = 0;
  for (int k = 0; k < 3; ++k) count += is_zero_at(k) ? 1 : 0;
  return count;
}

BaryPoint BaryPoint::canonical() const {
  const double s = scale();
  std::array<double, 3> out{};
  int largest = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(c_[k]) > std::abs(c_[largest])) largest = k;
  }
  for (int k = 0; k < 3; ++k) out[k] = c_[k] / std::abs(c_[largest]);
  for (int k = 0; k < 3; ++k) {
    if (!is_zero(c_[k], s)) {
      if (out[k] < 0.0) {
        for (double& v : out) v = -v;
      }
      break;
    }
  }
  return BaryPoint(out);
}

std::array<double, 3> BaryPoint::normalized() const {
  if (!is_finite()) throw Error(Errc::PointAtInfinity, "point lies on the line at infinity");
  const double s = sum();
  return {c_[0] / s, c_[1] / s, c_[2] / s};
}

BaryPoint BaryPoint::scaled(double rho) const { return BaryPoint(rho * c_[0], rho * c_[1], rho * c_[2]); }

double canonical_distance(const BaryPoint& p, const BaryPoint& q) {
  const auto u = p.canonical().coords();
  const auto v = q.canonical().coords();
  double same = 0.0, flipped = 0.0;
  for (int k = 0; k < 3; ++k) {
    same = std::max(same, std::abs(u[k] - v[k]));
    flipped = std::max(flipped, std::abs(u[k] + v[k]));
  }
  return std::min(same, flipped);
}

bool canonical_equal(const BaryPoint& p, const BaryPoint& q, double tol) { return canonical_distance(p, q) <= tol; }

TriPoint bary_to_tri(const Triangle& t, const BaryPoint& p) {
  const auto w = p.normalized();
  const double s2 = 2.0 * t.area();
  return {s2 * w[0] / t.a(), s2 * w[1] / t.b(), s2 * w[2] / t.c()};
}

BaryPoint tri_to_bary(const Triangle& t, const TriPoint& p) {
  const double s2 = 2.0 * t.area();
  return {t.a() * p.x() / s2, t.b() * p.y() / s2, t.c() * p.z() / s2};
}

Vec2 bary_to_cartesian(const Triangle& t, const BaryPoint& p) {
  const auto w = p.normalized();
  return w[0] * t.vertex(0) + w[1] * t.vertex(1) + w[2] * t.vertex(2);
}

TriPoint cartesian_to_tri(const Triangle& t, Vec2 q) {
  std::array<double, 3> d{};
  for (int k = 0; k < 3; ++k) {
    const Vec2 from = t.vertex((k + 1) % 3);
    const Vec2 to = t.vertex((k + 2) % 3);
    d[k] = cross(to - from, q - from) / t.side(k);
  }
  return TriPoint(d);
}

BaryPoint cartesian_to_bary(const Triangle& t, Vec2 q) { return tri_to_bary(t, cartesian_to_tri(t, q)); }

Vec2 tri_to_cartesian(const Triangle& t, const TriPoint& p) { return bary_to_cartesian(t, tri_to_bary(t, p)); }

double constraint_residual(const Triangle& t, const TriPoint& p) {
  return t.a() * p.x() + t.b() * p.y() + t.c() * p.z() - 2.0 * t.area();
}

double compute_J(const Triangle& t, const BaryPoint& p) {
  if (p.zero_count() > 0) throw Error(Errc::ZeroCoordinate, "J is undefined on the sidelines");
  double j = 0.0;
  for (int k = 0; k < 3; ++k) j += t.side(k) * t.side(k) / p[k];
  return j;
}

double J_scale(const Triangle& t, const BaryPoint& p) {
  double s = 0.0;
  for (int k = 0; k < 3; ++k) s = std::max(s, t.side(k) * t.side(k) / std::abs(p[k]));
  return s;
}

double circle_power(const Triangle& t, Vec2 q) {
  const Vec2 d = q - t.circumcenter();
  const double r = t.circumradius();
  return dot(d, d) - r * r;
}

int circumcircle_side(const Triangle& t, Vec2 q) {
  const Vec2 d = q - t.circumcenter();
  const double r = t.circumradius();
  return sign(circle_power(t, q), std::max(dot(d, d), r * r));
}

bool on_circumcircle(const Triangle& t, const BaryPoint& p) {
  return circumcircle_side(t, bary_to_cartesian(t, p)) == 0;
}

bool inside_circumcircle(const Triangle& t, const BaryPoint& p) {
  return circumcircle_side(t, bary_to_cartesian(t, p)) < 0;
}

}  // namespace trilin
