#include <doctest.h>

#include <cmath>

#include "support/brute_force.hpp"
#include "support/case_table.hpp"
#include "trilin/centers.hpp"
#include "trilin/error.hpp"
#include "trilin/oracle.hpp"

using namespace trilin;
using doctest::Approx;

namespace {

const Triangle kRight = Triangle::from_sides(3, 4, 5);
const Triangle kEquilateral = Triangle::from_sides(1, 1, 1);

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("plane basis") {
  const auto basis = oracle::plane_basis(kRight);
  for (const auto& e : basis) {
    CHECK(3 * e[0] + 4 * e[1] + 5 * e[2] == Approx(0).scale(1.0));
    CHECK(e[0] * e[0] + e[1] * e[1] + e[2] * e[2] == Approx(1));
  }
  CHECK(basis[0][0] * basis[1][0] + basis[0][1] * basis[1][1] + basis[0][2] * basis[1][2] ==
        Approx(0).scale(1.0));
}

TEST_CASE("lagrange solve") {
  const auto s = oracle::lagrange_solve(kRight, WeightTriple(1, 1, 1));
  CHECK(s.point.x() == Approx(0.72).epsilon(1e-12));
  CHECK(s.point.y() == Approx(0.96).epsilon(1e-12));
  CHECK(s.point.z() == Approx(1.20).epsilon(1e-12));
  CHECK(s.multiplier == Approx(12.0 / 50.0).epsilon(1e-12));

  // (1, 1, -1) on 3-4-5 puts M on the circumcircle: J = 9 + 16 - 25 = 0.
  CHECK(code_of([] { oracle::lagrange_solve(kRight, WeightTriple(1, 1, -1)); }) == Errc::SingularSystem);
  CHECK(code_of([] { oracle::lagrange_solve(kRight, WeightTriple(0, 1, 1)); }) == Errc::InvalidWeights);

  oracle::InstanceSampler sampler(41);
  for (int i = 0; i < 300; ++i) {
    const Triangle t = sampler.triangle();
    const WeightTriple w = sampler.weights(t);
    const auto sol = oracle::lagrange_solve(t, w);
    CHECK(constraint_residual(t, sol.point) == Approx(0).scale(2 * t.area()));
    for (int k = 0; k < 3; ++k) {
      CHECK(w[k] * sol.point[k] == Approx(t.side(k) * sol.multiplier).epsilon(1e-9).scale(t.side(k)));
    }
  }
}

TEST_CASE("grid scan examples") {
  const auto lemoine = oracle::grid_scan(kRight, WeightTriple(1, 1, 1), 10, 400, oracle::ProbeMode::Min);
  CHECK(std::abs(lemoine.best_value - 2.88) <= 1e-3 * 2.88 + 1e-2);
  CHECK(lemoine.best_value >= 2.88 - 1e-12);
  CHECK(lemoine.samples > 100000);

  const WeightTriple circum(double_angle_sines(kEquilateral));
  const auto eq = oracle::grid_scan(kEquilateral, circum, 3, 400, oracle::ProbeMode::Min);
  CHECK(eq.best_value == Approx(std::sqrt(3.0) / 8).epsilon(1e-3));

  const auto deg = oracle::grid_scan(kRight, WeightTriple(0, 1, 1), 10, 400, oracle::ProbeMode::Min);
  CHECK(deg.best_value >= 0);
  CHECK(deg.best_value <= 1e-2);

  const auto mx = oracle::grid_scan(kRight, WeightTriple(-1, -1, -1), 10, 400, oracle::ProbeMode::Max);
  CHECK(std::abs(mx.best_value + 2.88) <= 1e-2);

  CHECK(code_of([] { oracle::grid_scan(kRight, WeightTriple(1, 1, 1), 0, 400, oracle::ProbeMode::Min); }) ==
        Errc::InvalidArgument);
  CHECK(code_of([] { oracle::grid_scan(kRight, WeightTriple(1, 1, 1), 1, 5, oracle::ProbeMode::Min); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("grid refinement tightens the estimate") {
  const auto coarse = oracle::grid_scan(kRight, WeightTriple(1, 1, 1), 10, 100, oracle::ProbeMode::Min);
  const auto fine = oracle::grid_scan(kRight, WeightTriple(1, 1, 1), 10, 100, oracle::ProbeMode::Min, 3);
  CHECK(fine.best_value <= coarse.best_value);
  CHECK(fine.best_value - 2.88 <= 1e-4);
  CHECK(fine.best_point.x() == Approx(0.72).epsilon(1e-2));
}

TEST_CASE("grid scan is deterministic") {
  const auto a = oracle::grid_scan(kRight, WeightTriple(2, 3, -1), 8, 200, oracle::ProbeMode::Min, 1);
  const auto b = oracle::grid_scan(kRight, WeightTriple(2, 3, -1), 8, 200, oracle::ProbeMode::Min, 1);
  CHECK(a.best_value == b.best_value);
  CHECK(a.samples == b.samples);
  for (int k = 0; k < 3; ++k) CHECK(a.best_point[k] == b.best_point[k]);
}

TEST_CASE("ray probe") {
  for (const auto& row : cases::table()) {
    const Triangle t = Triangle::from_sides(row.sides[0], row.sides[1], row.sides[2]);
    const WeightTriple w(row.weights[0], row.weights[1], row.weights[2]);
    if (w.zero_count() >= 2) {
      CHECK(code_of([&] { oracle::ray_probe(t, w, 64); }) == Errc::InvalidArgument);
      continue;
    }
    const auto r = oracle::ray_probe(t, w, 64);
    CAPTURE(row.label);
    CHECK(r.probe_kind == oracle::ProbeKind::Ray);
    switch (row.kind) {
      case ExtremumKind::Min:
        CHECK(!r.unbounded_below);
        CHECK(r.unbounded_above);
        break;
      case ExtremumKind::Max:
        CHECK(r.unbounded_below);
        CHECK(!r.unbounded_above);
        break;
      default:
        // Semidefinite forms (J = 0, or a zero weight with an indefinite
        // pair) are still unbounded on at least one side.
        CHECK((r.unbounded_below || r.unbounded_above));
        break;
    }
    if (r.witness_below) CHECK(eval_F(t, w, *r.witness_below) < -oracle::kUnboundedLevel);
    if (r.witness_above) CHECK(eval_F(t, w, *r.witness_above) > oracle::kUnboundedLevel);
  }

  const auto both = oracle::ray_probe(kRight, WeightTriple(-1, 1, 1), 64);
  CHECK(both.unbounded_below);
  CHECK(both.unbounded_above);
}

TEST_CASE("finite difference gradient") {
  const auto at_min = oracle::lagrange_solve(kRight, WeightTriple(1, 1, 1)).point;
  const double h = oracle::default_fd_step(kRight);
  const auto g = oracle::fd_gradient(kRight, WeightTriple(1, 1, 1), at_min, h);
  CHECK(std::hypot(g[0], g[1]) <= 1e-9);

  const auto incenter = bary_to_tri(kRight, named_center(kRight, CenterName::Incenter));
  const auto gi = oracle::fd_gradient(kRight, WeightTriple(1, 1, 1), incenter, h);
  CHECK(std::hypot(gi[0], gi[1]) > 0.1);

  const WeightTriple circum(double_angle_sines(kEquilateral));
  const auto center = bary_to_tri(kEquilateral, BaryPoint(1, 1, 1));
  const auto ge = oracle::fd_gradient(kEquilateral, circum, center, oracle::default_fd_step(kEquilateral));
  CHECK(std::hypot(ge[0], ge[1]) <= 1e-9);
}

TEST_CASE("no lattice sample beats a reported extremum") {
  oracle::InstanceSampler sampler(42);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const Triangle t = sampler.triangle();
    const WeightTriple w = sampler.weights(t);
    const auto r = solve_extremum(t, w);
    if (r.kind != ExtremumKind::Min && r.kind != ExtremumKind::Max) continue;
    const auto mode = r.kind == ExtremumKind::Min ? oracle::ProbeMode::Min : oracle::ProbeMode::Max;
    const auto g = oracle::grid_scan(t, w, 4 * t.circumradius(), 200, mode);
    const double slack = 1e-9 * std::max(1.0, std::abs(*r.value));
    if (mode == oracle::ProbeMode::Min) CHECK(g.best_value >= *r.value - slack);
    else CHECK(g.best_value <= *r.value + slack);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("verify corpus") {
  const auto report = oracle::verify_corpus(40, 7);
  CHECK(report.ok());
  CHECK(report.trials == 40);
  CHECK(report.extremal + report.nonexistence == 40);
  CHECK(report.grid_checked == report.extremal);

  const auto again = oracle::verify_corpus(40, 7);
  CHECK(again.extremal == report.extremal);
  CHECK(again.nonexistence == report.nonexistence);

  const auto fixed = oracle::verify_corpus(20, 3, kRight);
  CHECK(fixed.ok());
  CHECK(fixed.trials == 20);
}

TEST_CASE("verify_instance on known verdicts") {
  CHECK(oracle::verify_instance(kRight, WeightTriple(1, 1, 1)).empty());
  CHECK(oracle::verify_instance(kRight, WeightTriple(-1, 1, 1)).empty());
}
