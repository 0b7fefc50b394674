#pragma once

#include <array>
#include <string>
#include <vector>

#include "trilin/extremum.hpp"

namespace cases {

struct Row {
  std::array<double, 3> sides;
  std::array<double, 3> weights;
  std::string label;
  trilin::ExtremumKind kind;
};

// Every case label with at least two weight instances, including permuted
// sign/zero positions.
inline std::vector<Row> table() {
  using K = trilin::ExtremumKind;
  const std::array<double, 3> r{3, 4, 5};
  const std::array<double, 3> s{4, 5, 6};
  return {
      {r, {1, 1, 1}, "1.1", K::Min},
      {s, {2, 3, 4}, "1.1", K::Min},
      {r, {-1, 10, 10}, "1.2", K::Min},
      {r, {10, -1, 10}, "1.2", K::Min},
      {s, {10, 10, -1}, "1.2", K::Min},
      {r, {-1, 1, 1}, "1.2", K::NoExtremum},
      {r, {1, -1, 1}, "1.2", K::NoExtremum},
      {r, {1, 1, -1}, "1.2", K::NoExtremum},  // J = 0 exactly: M on the arc
      {r, {3, -1, -1}, "1.3", K::NoExtremum},
      {s, {-1, -1, 5}, "1.3", K::NoExtremum},
      {r, {-1, -1, -1}, "2.1", K::Max},
      {s, {-2, -3, -1}, "2.1", K::Max},
      {r, {1, -10, -10}, "2.2.2", K::Max},
      {r, {-10, 1, -10}, "2.2.2", K::Max},
      {r, {1, -1, -1}, "2.2.1", K::NoExtremum},
      {r, {-1, 1, -1}, "2.2.1", K::NoExtremum},
      {r, {1, 1, -3}, "2.3", K::NoExtremum},
      {s, {-3, 1, 1}, "2.3", K::NoExtremum},
      {r, {-2, 1, 1}, "3.1", K::NoExtremum},
      {s, {1, -3, 2}, "3.1", K::NoExtremum},
      {r, {2, -1, -1}, "3.2", K::NoExtremum},
      {s, {-1, -1, 2}, "3.2", K::NoExtremum},
      {r, {0, 1, 1}, "4.1", K::Min},
      {s, {2, 0, 3}, "4.1", K::Min},
      {r, {1, 1, 0}, "4.1", K::Min},
      {r, {0, -1, -1}, "4.2", K::Max},
      {s, {-2, -3, 0}, "4.2", K::Max},
      {r, {0, 1, -1}, "4.3", K::NoExtremum},
      {s, {2, 0, -3}, "4.3", K::NoExtremum},
      {r, {1, 0, 0}, "5.1", K::DegenerateMinSet},
      {s, {0, 0, 3}, "5.1", K::DegenerateMinSet},
      {r, {-1, 0, 0}, "5.2", K::DegenerateMaxSet},
      {s, {0, -2, 0}, "5.2", K::DegenerateMaxSet},
  };
}

}  // namespace cases
