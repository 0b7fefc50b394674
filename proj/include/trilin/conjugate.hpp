#pragma once

#include "trilin/coordinates.hpp"

namespace trilin {

/// Isogonal conjugate (a^2/l : b^2/m : c^2/n), in canonical form.
///
/// Circumcircle points map to points at infinity and back. A point with one
/// zero coordinate (on a sideline, off the vertices) maps to the opposite
/// vertex. Vertices throw VertexUndefined: their preimage is a whole sideline.
BaryPoint isogonal(const Triangle& t, const BaryPoint& p);

/// Diagnostic: isogonal(isogonal(p)) == p canonically, within tolerance().
bool is_involution_fixed_under(const Triangle& t, const BaryPoint& p);

}  // namespace trilin
