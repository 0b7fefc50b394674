#include "trilin/conjugate.hpp"

#include "trilin/error.hpp"
#include "trilin/tolerance.hpp"

namespace trilin {

BaryPoint isogonal(const Triangle& t, const BaryPoint& p) {
  const int zeros = p.zero_count();
  if (zeros >= 2) throw Error(Errc::VertexUndefined, "isogonal conjugate of a vertex is not a point");
  if (zeros == 1) {
    std::array<double, 3> v{};
    for (int k = 0; k < 3; ++k) {
      if (p.is_zero_at(k)) v[k] = 1.0;
    }
    return BaryPoint(v);
  }
  std::array<double, 3> v{};
  for (int k = 0; k < 3; ++k) v[k] = t.side(k) * t.side(k) / p[k];
  return BaryPoint(v).canonical();
}

bool is_involution_fixed_under(const Triangle& t, const BaryPoint& p) {
  if (p.zero_count() > 0) throw Error(Errc::VertexUndefined, "involution check needs nonzero coordinates");
  return canonical_equal(isogonal(t, isogonal(t, p)), p, tolerance());
}

}  // namespace trilin
