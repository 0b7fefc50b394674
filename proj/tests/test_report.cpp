#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "trilin/centers.hpp"
#include "trilin/error.hpp"
#include "trilin/oracle.hpp"
#include "trilin/report.hpp"
#include "trilin/svg.hpp"

using namespace trilin;
using doctest::Approx;

namespace {

const Triangle kRight = Triangle::from_sides(3, 4, 5);

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::string render(const Triangle& t, const std::vector<Annotation>& marks, std::optional<double> level,
                   std::optional<WeightTriple> w) {
  std::ostringstream out;
  render_svg(t, marks, level, w, out);
  return out.str();
}

}  // namespace

TEST_CASE("inequality examples") {
  const auto in = inequality_report(kRight, WeightTriple(1, 1, 1), named_center(kRight, CenterName::Incenter));
  CHECK(in.lhs == Approx(3));
  CHECK(in.rhs == Approx(2.88));
  CHECK(in.slack == Approx(0.12));
  CHECK(!in.tight);
  CHECK(in.kind == ExtremumKind::Min);
  CHECK(in.case_label == "1.1");
  CHECK(*in.J == Approx(50));

  const auto sym = inequality_report(kRight, WeightTriple(1, 1, 1), named_center(kRight, CenterName::Symmedian));
  CHECK(sym.tight);
  CHECK(sym.slack == Approx(0).scale(1.0));

  const auto mx = inequality_report(kRight, WeightTriple(-1, -1, -1), BaryPoint(1, 1, 1));
  CHECK(mx.kind == ExtremumKind::Max);
  CHECK(mx.slack >= 0);
  CHECK(mx.slack == Approx(mx.rhs - mx.lhs));

  try {
    inequality_report(kRight, WeightTriple(2, -1, -1), BaryPoint(1, 1, 1));
    FAIL("expected NoBound");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoBound);
  }
  try {
    inequality_report(kRight, WeightTriple(1, 1, 1), BaryPoint(1, -1, 0));
    FAIL("expected PointAtInfinity");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PointAtInfinity);
  }
}

TEST_CASE("inequality slack is never negative") {
  oracle::InstanceSampler sampler(51);
  std::uniform_real_distribution<double> pos(0.05, 5.0);
  int done = 0;
  while (done < 100) {
    const Triangle t = sampler.triangle();
    const WeightTriple w(pos(sampler.engine()), pos(sampler.engine()), pos(sampler.engine()));
    for (int j = 0; j < 10; ++j) {
      const BaryPoint x(sampler.uniform(-3, 3), sampler.uniform(-3, 3), sampler.uniform(-3, 3));
      if (!x.is_finite() || std::abs(x.sum()) < 0.1) continue;
      const auto r = inequality_report(t, w, x);
      CHECK(r.slack >= -1e-9 * std::max(1.0, std::abs(r.rhs)));
    }
    // And the touch point itself is tight.
    const auto n = *solve_extremum(t, w).point;
    const auto at = inequality_report(t, w, n);
    CHECK(at.tight);
    CHECK(std::abs(at.slack) <= 1e-9 * std::max(1.0, at.rhs));
    ++done;
  }
}

TEST_CASE("circumcenter weights meet at the orthocenter") {
  oracle::InstanceSampler sampler(52);
  for (int i = 0; i < 100; ++i) {
    const Triangle t = sampler.acute_triangle();
    const auto rec = circum_ortho_example(t);
    CHECK(rec.case_label == "1.1");
    CHECK(rec.result.kind == ExtremumKind::Min);
    CHECK(*rec.result.value == Approx(rec.closed_form).epsilon(1e-9));
    CHECK(*rec.result.J == Approx(*rec.J_closed_form).epsilon(1e-9));
    CHECK(rec.F_at_H == Approx(rec.closed_form).epsilon(1e-9));
    CHECK(canonical_distance(*rec.result.point, rec.orthocenter) <= 1e-9);
  }

  const auto eq = circum_ortho_example(Triangle::from_sides(1, 1, 1));
  CHECK(std::abs(*eq.result.value - std::numbers::sqrt3 / 8) <= 1e-12);

  const auto right = circum_ortho_example(kRight);
  CHECK(right.case_label == "4.1");
  CHECK(!right.J_closed_form);
  CHECK(canonical_distance(*right.result.point, BaryPoint(0, 0, 1)) <= 1e-12);
  CHECK(*right.result.value == Approx(0).scale(1.0));

  const Triangle obtuse = Triangle::from_sides(2, 3, 4);
  const auto ob = circum_ortho_example(obtuse);
  CHECK(ob.result.kind == ExtremumKind::Min);
  CHECK(*ob.result.value == Approx(-1.7475).epsilon(1e-4));
  CHECK(*ob.result.value == Approx(ob.closed_form).epsilon(1e-9));
  const auto g = oracle::grid_scan(obtuse, ob.weights, 6 * obtuse.circumradius(), 600, oracle::ProbeMode::Min, 2);
  CHECK(std::abs(g.best_value - *ob.result.value) <= 1e-3);
}

TEST_CASE("svg markers and structure") {
  const std::vector<Annotation> marks{
      {bary_to_cartesian(kRight, named_center(kRight, CenterName::Symmedian)), "K"},
      {bary_to_cartesian(kRight, named_center(kRight, CenterName::Centroid)), "G<&>"},
  };
  const std::string svg = render(kRight, marks, std::nullopt, std::nullopt);
  CHECK(svg.starts_with("<?xml"));
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "class=\"marker\"") == 2);
  CHECK(svg.find("G&lt;&amp;&gt;") != std::string::npos);
  CHECK(svg.find("class=\"level\"") == std::string::npos);
  CHECK(render(kRight, marks, std::nullopt, std::nullopt) == svg);
}

TEST_CASE("level sets") {
  const Box box = figure_box(kRight);
  CHECK(box.xmin <= -kRight.circumradius());
  CHECK(box.ymax >= 2 * kRight.circumradius());

  // Just above the minimum the level set is a small loop around the symmedian point.
  const auto tiny = trace_level_set(kRight, WeightTriple(1, 1, 1), 2.9, box);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].closed);
  const Vec2 k = bary_to_cartesian(kRight, named_center(kRight, CenterName::Symmedian));
  for (const Vec2& p : tiny[0].points) CHECK(norm(p - k) < 0.5);

  CHECK(trace_level_set(kRight, WeightTriple(1, 1, 1), 2.8, box).empty());

  // Indefinite form: a hyperbola centred at (1.5, -1.125). The branch through
  // A's corner lies in the figure box; its mirror image dips below y = -R.
  const WeightTriple indefinite(-1, 1, 1);
  CHECK(trace_level_set(kRight, indefinite, 0.0, box).size() == 1);
  const Box wide{-12, 15, -14, 12};
  const auto branches = trace_level_set(kRight, indefinite, 0.0, wide);
  REQUIRE(branches.size() == 2);
  const Vec2 centre{1.5, -1.125};
  const auto side = [&](const Polyline& p) { return p.points.front().y > centre.y ? 1 : -1; };
  CHECK(side(branches[0]) != side(branches[1]));
  for (const auto& b : branches) {
    CHECK(!b.closed);
    for (const Vec2& p : b.points) {
      CHECK(eval_F(kRight, indefinite, cartesian_to_tri(kRight, p)) == Approx(0).scale(1.0).epsilon(0.05));
    }
  }

  const std::string svg = render(kRight, {}, 2.9, WeightTriple(1, 1, 1));
  CHECK(count(svg, "class=\"level\"") == 1);
  CHECK(render(kRight, {}, 2.9, WeightTriple(1, 1, 1)) == svg);
}

TEST_CASE("svg file output") {
  const auto path = std::filesystem::temp_directory_path() / "trilin_test_report.svg";
  render_svg_file(kRight, {}, std::nullopt, std::nullopt, path.string());
  CHECK(std::filesystem::file_size(path) > 100);
  std::filesystem::remove(path);
  try {
    render_svg_file(kRight, {}, std::nullopt, std::nullopt, "/nonexistent-dir/x.svg");
    FAIL("expected IoFailure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoFailure);
  }
}
