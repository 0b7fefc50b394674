#pragma once

#include <optional>
#include <string_view>

#include "trilin/coordinates.hpp"

namespace trilin {

enum class CenterName { Centroid, Incenter, Circumcenter, Orthocenter, Symmedian };

std::string_view to_string(CenterName name);

/// Throws UnknownCenter.
CenterName parse_center_name(std::string_view name);

/// Homogeneous barycentrics: centroid (1:1:1), incenter (a:b:c),
/// circumcenter (sin 2A : sin 2B : sin 2C), orthocenter (tan A : tan B : tan C),
/// symmedian (a^2 : b^2 : c^2). The trigonometric centers are evaluated in
/// Conway form so right angles produce exact zeros.
BaryPoint named_center(const Triangle& t, CenterName name);
BaryPoint named_center(const Triangle& t, std::string_view name);

/// (sin 2A, sin 2B, sin 2C) computed as 4 S S_A / (b^2 c^2), cyclic.
std::array<double, 3> double_angle_sines(const Triangle& t);

}  // namespace trilin
