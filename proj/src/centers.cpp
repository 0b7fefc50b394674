#include "trilin/centers.hpp"

#include <string>

#include "trilin/error.hpp"

namespace trilin {

std::string_view to_string(CenterName name) {
  switch (name) {
    case CenterName::Centroid: return "centroid";
    case CenterName::Incenter: return "incenter";
    case CenterName::Circumcenter: return "circumcenter";
    case CenterName::Orthocenter: return "orthocenter";
    case CenterName::Symmedian: return "symmedian";
  }
  return "?";
}

CenterName parse_center_name(std::string_view name) {
  for (auto c : {CenterName::Centroid, CenterName::Incenter, CenterName::Circumcenter, CenterName::Orthocenter,
                 CenterName::Symmedian}) {
    if (to_string(c) == name) return c;
  }
  throw Error(Errc::UnknownCenter, "unknown triangle center '" + std::string(name) + "'");
}

std::array<double, 3> double_angle_sines(const Triangle& t) {
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const double s1 = t.side((k + 1) % 3);
    const double s2 = t.side((k + 2) % 3);
    out[k] = 4.0 * t.area() * t.conway(k) / (s1 * s1 * s2 * s2);
  }
  return out;
}

BaryPoint named_center(const Triangle& t, CenterName name) {
  const double a = t.a(), b = t.b(), c = t.c();
  switch (name) {
    case CenterName::Centroid:
      return {1.0, 1.0, 1.0};
    case CenterName::Incenter:
      return {a, b, c};
    case CenterName::Circumcenter:
      return BaryPoint(double_angle_sines(t));
    case CenterName::Orthocenter: {
      // tan A = 2S / S_A; clearing denominators gives (S_B S_C : S_C S_A : S_A S_B).
      const double sa = t.conway(0), sb = t.conway(1), sc = t.conway(2);
      const double s2 = 2.0 * t.area();
      return {sb * sc / s2, sc * sa / s2, sa * sb / s2};
    }
    case CenterName::Symmedian:
      return {a * a, b * b, c * c};
  }
  throw Error(Errc::UnknownCenter, "unknown triangle center");
}

BaryPoint named_center(const Triangle& t, std::string_view name) { return named_center(t, parse_center_name(name)); }

}  // namespace trilin
