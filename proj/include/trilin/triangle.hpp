#pragma once

#include <array>
#include <cmath>

namespace trilin {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
  friend Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
  friend Vec2 operator*(double s, Vec2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 p, Vec2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Vec2 p, Vec2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Vec2 p) { return std::hypot(p.x, p.y); }

/// Vertices are indexed 0, 1, 2 for A, B, C. Side k is the one opposite
/// vertex k, so side 0 is BC with length a.
enum class Vertex { A = 0, B = 1, C = 2 };

char vertex_name(int k);
/// "BC", "CA" or "AB" for the side opposite vertex k.
const char* side_name(int k);

/// A non-degenerate triangle with counterclockwise vertices. Immutable.
class Triangle {
 public:
  /// Canonical embedding: B = (0, 0), C = (a, 0), A above the x-axis.
  static Triangle from_sides(double a, double b, double c);

  /// Vertices are taken as A, B, C; B and C are swapped when the supplied
  /// order is clockwise.
  static Triangle from_vertices(Vec2 p1, Vec2 p2, Vec2 p3);

  double a() const { return sides_[0]; }
  double b() const { return sides_[1]; }
  double c() const { return sides_[2]; }
  double side(int k) const { return sides_[k]; }
  const std::array<double, 3>& sides() const { return sides_; }

  double area() const { return area_; }
  double alpha() const { return angles_[0]; }
  double beta() const { return angles_[1]; }
  double gamma() const { return angles_[2]; }
  double angle(int k) const { return angles_[k]; }

  /// cos of the angle at vertex k, from the law of cosines (exact for
  /// right angles with integer sides).
  double cos_angle(int k) const;

  /// Conway's S_k = (b^2 + c^2 - a^2) / 2 for k = 0, cyclic.
  double conway(int k) const;

  double circumradius() const { return circumradius_; }
  Vec2 circumcenter() const { return circumcenter_; }

  Vec2 vertex(int k) const { return vertices_[k]; }
  const std::array<Vec2, 3>& vertices() const { return vertices_; }

  /// Twice the signed area of the stored embedding.
  double signed_area2() const;

 private:
  Triangle(std::array<double, 3> sides, std::array<Vec2, 3> vertices, double area);

  std::array<double, 3> sides_;
  std::array<Vec2, 3> vertices_;
  std::array<double, 3> angles_{};
  double area_;
  double circumradius_ = 0.0;
  Vec2 circumcenter_;
};

}  // namespace trilin
