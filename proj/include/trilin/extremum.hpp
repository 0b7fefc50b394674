#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trilin/coordinates.hpp"
#include "trilin/regions.hpp"

namespace trilin {

/// Weights (l, m, n), not all zero. Read as homogeneous barycentrics of a
/// point M, possibly at infinity.
class WeightTriple {
 public:
  WeightTriple(double l, double m, double n);
  explicit WeightTriple(const std::array<double, 3>& w);

  double l() const { return w_[0]; }
  double m() const { return w_[1]; }
  double n() const { return w_[2]; }
  double operator[](int k) const { return w_[k]; }
  const std::array<double, 3>& values() const { return w_; }

  double sum() const { return w_[0] + w_[1] + w_[2]; }
  double scale() const;

  /// Sign of the sum under the tolerance policy.
  int sum_sign() const;
  bool is_zero_at(int k) const;
  int zero_count() const;
  /// Strictly negative, nonzero entries.
  int negative_count() const;

  BaryPoint as_point() const { return BaryPoint(w_); }

 private:
  std::array<double, 3> w_;
};

/// Throws ZeroScale.
WeightTriple scale_weights(const WeightTriple& w, double rho);

/// F(X) = l x^2 + m y^2 + n z^2.
double eval_F(const Triangle& t, const WeightTriple& w, const TriPoint& p);

enum class ExtremumKind { Min, Max, NoExtremum, DegenerateMinSet, DegenerateMaxSet };

const char* to_string(ExtremumKind kind);

struct ExtremumResult {
  ExtremumKind kind = ExtremumKind::NoExtremum;
  std::optional<double> value;
  /// Extremal point (Min/Max), canonical.
  std::optional<BaryPoint> point;
  /// Touch point of the level surface in directed distances (Min/Max).
  std::optional<TriPoint> point_tri;
  /// Index of the sideline carrying a degenerate extremal set; side k is
  /// opposite vertex k.
  std::optional<int> set_side;
  /// J on the homogeneous input weights, when no weight vanishes.
  std::optional<double> J;
  std::string case_label;
  std::optional<RegionLabel> region_M;
  std::optional<RegionLabel> region_N;
  std::vector<std::string> diagnostics;
};

/// Classifies and locates the extremum of F over the plane of the triangle.
///
/// The decision uses the count of vanishing weights, the sign of l+m+n, the
/// count of negative weights and the sign of J. Min/Max points are the
/// isogonal conjugate of M and are cross-checked against the touch-point
/// formula x0 = (2S/J)(a/l); the extremal value is 4S^2/J. Any coordinate
/// position may carry the distinguished sign or zero; case labels follow the
/// representative pattern. Throws VerificationFailed if the two point
/// formulas disagree.
ExtremumResult solve_extremum(const Triangle& t, const WeightTriple& w);

struct MassVectorIdentity {
  /// |m AB + n AC|^2 from the embedding.
  double vsq = 0.0;
  /// -l m n J.
  double rhs = 0.0;
};

/// For zero-sum weights with no zero entry, the constant mass-point vector
/// v = m AB + n AC satisfies v^2 = -l m n J. Throws SumNotZero, ZeroCoordinate.
MassVectorIdentity mass_vector_identity(const Triangle& t, const WeightTriple& w);

}  // namespace trilin
