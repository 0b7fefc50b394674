#pragma once

#include <array>

#include "trilin/triangle.hpp"

namespace trilin {

/// Directed distances (x, y, z) to the lines BC, CA, AB, positive on the side
/// of the opposite vertex. Points of the plane satisfy ax + by + cz = 2S.
struct TriPoint {
  std::array<double, 3> d{};

  TriPoint() = default;
  TriPoint(double x, double y, double z) : d{x, y, z} {}
  explicit TriPoint(const std::array<double, 3>& v) : d(v) {}

  double x() const { return d[0]; }
  double y() const { return d[1]; }
  double z() const { return d[2]; }
  double operator[](int k) const { return d[k]; }
};

enum class PointClass { Finite, AtInfinity };

/// Homogeneous barycentric coordinates (l : m : n), never silently
/// normalized. The point is at infinity when l + m + n vanishes relative to
/// the largest coordinate.
class BaryPoint {
 public:
  BaryPoint(double l, double m, double n);
  explicit BaryPoint(const std::array<double, 3>& c);

  double l() const { return c_[0]; }
  double m() const { return c_[1]; }
  double n() const { return c_[2]; }
  double operator[](int k) const { return c_[k]; }
  const std::array<double, 3>& coords() const { return c_; }

  double sum() const { return c_[0] + c_[1] + c_[2]; }
  /// Largest coordinate magnitude.
  double scale() const;

  PointClass point_class() const;
  bool is_finite() const { return point_class() == PointClass::Finite; }

  /// Coordinates that vanish relative to scale().
  int zero_count() const;
  bool is_zero_at(int k) const;

  /// Largest-magnitude coordinate is +-1, first nonzero coordinate positive.
  BaryPoint canonical() const;

  /// Sum-normalized coordinates. Throws PointAtInfinity.
  std::array<double, 3> normalized() const;

  BaryPoint scaled(double rho) const;

 private:
  std::array<double, 3> c_;
};

/// Max-abs difference of the canonical forms, minimized over an overall sign.
double canonical_distance(const BaryPoint& p, const BaryPoint& q);
bool canonical_equal(const BaryPoint& p, const BaryPoint& q, double tol);

TriPoint bary_to_tri(const Triangle& t, const BaryPoint& p);
BaryPoint tri_to_bary(const Triangle& t, const TriPoint& p);

Vec2 bary_to_cartesian(const Triangle& t, const BaryPoint& p);
TriPoint cartesian_to_tri(const Triangle& t, Vec2 q);
BaryPoint cartesian_to_bary(const Triangle& t, Vec2 q);
Vec2 tri_to_cartesian(const Triangle& t, const TriPoint& p);

/// ax + by + cz - 2S.
double constraint_residual(const Triangle& t, const TriPoint& p);

/// J = a^2/l + b^2/m + c^2/n on the coordinates as given, so J(rho p) =
/// J(p) / rho. Throws ZeroCoordinate for points on a sideline.
double compute_J(const Triangle& t, const BaryPoint& p);

/// Largest |a^2/l|-type term entering J; the magnitude J is compared against.
double J_scale(const Triangle& t, const BaryPoint& p);

/// |q - O|^2 - R^2; negative inside the circumcircle.
double circle_power(const Triangle& t, Vec2 q);

bool on_circumcircle(const Triangle& t, const BaryPoint& p);
bool inside_circumcircle(const Triangle& t, const BaryPoint& p);
/// -1 inside, 0 on, +1 outside, decided on the Cartesian embedding.
int circumcircle_side(const Triangle& t, Vec2 q);

}  // namespace trilin
