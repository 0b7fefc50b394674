#pragma once

// Numeric cross-checks that never touch the closed-form solution: a dense
// linear solve of the tangency system, grid and ray probing of F on the plane,
// and finite-difference gradients along the constraint plane.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trilin/coordinates.hpp"
#include "trilin/extremum.hpp"

namespace trilin::oracle {

using Vec3 = std::array<double, 3>;

/// Orthonormal basis of the direction plane a d1 + b d2 + c d3 = 0.
std::array<Vec3, 2> plane_basis(const Triangle& t);

struct LagrangeSolution {
  TriPoint point;
  /// The common ratio l x0 / a = m y0 / b = n z0 / c.
  double multiplier = 0.0;
};

/// Solves l x0 = a t, m y0 = b t, n z0 = c t, a x0 + b y0 + c z0 = 2S as a
/// dense 4x4 system. Throws InvalidWeights for a zero weight and
/// SingularSystem when the system is numerically singular (J near 0).
LagrangeSolution lagrange_solve(const Triangle& t, const WeightTriple& w);

enum class ProbeKind { Grid, Ray };
enum class ProbeMode { Min, Max };

struct ProbeReport {
  double best_value = 0.0;
  TriPoint best_point;
  std::size_t samples = 0;
  ProbeKind probe_kind = ProbeKind::Grid;
  bool unbounded_below = false;
  bool unbounded_above = false;
  /// Ray-probe witnesses reaching F < -1e6 / F > 1e6.
  std::optional<TriPoint> witness_below;
  std::optional<TriPoint> witness_above;
};

/// Evaluates F on a regular (steps+1)^2 Cartesian lattice clipped to the disk
/// of the given radius about the circumcenter and keeps the best sample.
/// refine_passes > 0 re-grids a shrinking window around the incumbent after
/// the full-disk pass. Throws InvalidArgument for radius <= 0 or steps < 10.
ProbeReport grid_scan(const Triangle& t, const WeightTriple& w, double radius, int steps, ProbeMode mode,
                      int refine_passes = 0);

inline constexpr double kUnboundedLevel = 1e6;

/// Probes rays from the centroid along `trials` evenly spaced in-plane
/// directions plus the principal directions of F restricted to the plane.
/// Throws InvalidArgument when two weights vanish.
ProbeReport ray_probe(const Triangle& t, const WeightTriple& w, int trials);

/// Central differences of F along the two plane_basis directions.
std::array<double, 2> fd_gradient(const Triangle& t, const WeightTriple& w, const TriPoint& p, double h);

inline double default_fd_step(const Triangle& t) { return 1e-5 * t.circumradius(); }

/// Seeded generator of bulk test instances: sides uniform on [1, 10] with a
/// triangle-inequality margin of 0.05, weights uniform on [-5, 5] with
/// |w_k| >= 0.01 and |J| >= 0.01 * J_scale.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

  Triangle triangle();
  Triangle acute_triangle();
  WeightTriple weights(const Triangle& t);
  /// Weights with l + m + n = 0 exactly in the first two draws' sense:
  /// n = -(l + m), rejecting small entries.
  WeightTriple zero_sum_weights();
  double uniform(double lo, double hi);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Zoom passes used by verify_instance on top of the 6R / 600-step grid; the
/// plain lattice alone has O(h^2 sum|w|) error that exceeds 1e-2 on
/// triangles with a large circumradius.
inline constexpr int kVerifyRefinePasses = 2;

struct VerifyReport {
  int trials = 0;
  int extremal = 0;
  int grid_checked = 0;
  int nonexistence = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Re-derives one solver verdict numerically; returns failure messages.
std::vector<std::string> verify_instance(const Triangle& t, const WeightTriple& w);

/// Runs verify_instance over a seeded corpus. With `fixed`, only weights
/// are drawn. Trials run in parallel; the report is independent of scheduling.
VerifyReport verify_corpus(int trials, std::uint64_t seed, const std::optional<Triangle>& fixed = std::nullopt);

}  // namespace trilin::oracle
