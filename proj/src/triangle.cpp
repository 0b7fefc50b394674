#include "trilin/triangle.hpp"

#include <algorithm>
#include <functional>

#include "trilin/error.hpp"
#include "trilin/tolerance.hpp"

namespace trilin {
namespace {

// Kahan's cancellation-safe Heron formula. Returns a non-positive value for
// sides that violate the strict triangle inequality under the tolerance.
double heron_area(std::array<double, 3> s) {
  std::sort(s.begin(), s.end(), std::greater<>());
  const double a = s[0], b = s[1], c = s[2];
  const double gap = c - (a - b);
  if (gap <= tolerance() * a) return 0.0;
  const double p = (a + (b + c)) * gap * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(p);
}

}  // namespace

char vertex_name(int k) { return "ABC"[k]; }

const char* side_name(int k) {
  static constexpr const char* kNames[] = {"BC", "CA", "AB"};
  return kNames[k];
}

Triangle::Triangle(std::array<double, 3> sides, std::array<Vec2, 3> vertices, double area)
    : sides_(sides), vertices_(vertices), area_(area) {
  for (int k = 0; k < 3; ++k) {
    angles_[k] = std::acos(std::clamp(cos_angle(k), -1.0, 1.0));
  }
  circumradius_ = sides_[0] * sides_[1] * sides_[2] / (4.0 * area_);

  // Circumcenter from the perpendicular-bisector determinant, relative to A.
  const Vec2 ab = vertices_[1] - vertices_[0];
  const Vec2 ac = vertices_[2] - vertices_[0];
  const double d = 2.0 * cross(ab, ac);
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  circumcenter_ = vertices_[0] + Vec2{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
}

Triangle Triangle::from_sides(double a, double b, double c) {
  for (double s : {a, b, c}) {
    if (!std::isfinite(s) || !(s > 0.0)) throw Error(Errc::NonPositiveSide, "side lengths must be finite and positive");
  }
  const double area = heron_area({a, b, c});
  if (!(area > 0.0)) throw Error(Errc::TriangleInequalityViolated, "sides do not form a non-degenerate triangle");
  const double ax = (a * a + c * c - b * b) / (2.0 * a);
  const double ay = 2.0 * area / a;
  return Triangle({a, b, c}, {Vec2{ax, ay}, Vec2{0.0, 0.0}, Vec2{a, 0.0}}, area);
}

Triangle Triangle::from_vertices(Vec2 p1, Vec2 p2, Vec2 p3) {
  for (Vec2 p : {p1, p2, p3}) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(Errc::InvalidArgument, "vertex coordinates must be finite");
  }
  const double span = std::max({norm(p2 - p1), norm(p3 - p2), norm(p1 - p3)});
  double area2 = cross(p2 - p1, p3 - p1);
  if (std::abs(area2) <= tolerance() * span * span) {
    throw Error(Errc::CollinearVertices, "vertices are collinear");
  }
  if (area2 < 0.0) {
    std::swap(p2, p3);
    area2 = -area2;
  }
  return Triangle({norm(p3 - p2), norm(p1 - p3), norm(p2 - p1)}, {p1, p2, p3}, 0.5 * area2);
}

double Triangle::cos_angle(int k) const {
  return conway(k) / (sides_[(k + 1) % 3] * sides_[(k + 2) % 3]);
}

double Triangle::conway(int k) const {
  const double opposite = sides_[k];
  const double s1 = sides_[(k + 1) % 3];
  const double s2 = sides_[(k + 2) % 3];
  return 0.5 * (s1 * s1 + s2 * s2 - opposite * opposite);
}

double Triangle::signed_area2() const { return cross(vertices_[1] - vertices_[0], vertices_[2] - vertices_[0]); }

}  // namespace trilin
