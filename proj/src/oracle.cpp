#include "trilin/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

#include "trilin/conjugate.hpp"
#include "trilin/error.hpp"
#include "trilin/tolerance.hpp"

namespace trilin::oracle {
namespace {

Vec3 axpy(const Vec3& p, double s, const Vec3& d) { return {p[0] + s * d[0], p[1] + s * d[1], p[2] + s * d[2]}; }

double dot3(const Vec3& p, const Vec3& q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; }

double quad_form(const WeightTriple& w, const Vec3& d) {
  return w.l() * d[0] * d[0] + w.m() * d[1] * d[1] + w.n() * d[2] * d[2];
}

bool better(double candidate, double incumbent, ProbeMode mode) {
  return mode == ProbeMode::Min ? candidate < incumbent : candidate > incumbent;
}

}  // namespace

std::array<Vec3, 2> plane_basis(const Triangle& t) {
  const double len = std::sqrt(t.a() * t.a() + t.b() * t.b() + t.c() * t.c());
  const Vec3 normal{t.a() / len, t.b() / len, t.c() / len};
  int axis = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(normal[k]) < std::abs(normal[axis])) axis = k;
  }
  Vec3 e{};
  e[axis] = 1.0;
  Vec3 u = axpy(e, -normal[axis], normal);
  const double ul = std::sqrt(dot3(u, u));
  for (double& v : u) v /= ul;
  const Vec3 v{normal[1] * u[2] - normal[2] * u[1], normal[2] * u[0] - normal[0] * u[2],
               normal[0] * u[1] - normal[1] * u[0]};
  return {u, v};
}

LagrangeSolution lagrange_solve(const Triangle& t, const WeightTriple& w) {
  if (w.zero_count() > 0) throw Error(Errc::InvalidWeights, "tangency system needs nonzero weights");
  Eigen::Matrix4d system = Eigen::Matrix4d::Zero();
  Eigen::Vector4d rhs = Eigen::Vector4d::Zero();
  for (int k = 0; k < 3; ++k) {
    system(k, k) = w[k];
    system(k, 3) = -t.side(k);
    system(3, k) = t.side(k);
  }
  rhs(3) = 2.0 * t.area();

  const Eigen::PartialPivLU<Eigen::Matrix4d> lu(system);
  const double rcond = lu.rcond();
  if (!(rcond > tolerance())) throw Error(Errc::SingularSystem, "tangency system is singular");
  const Eigen::Vector4d x = lu.solve(rhs);
  if (!x.allFinite()) throw Error(Errc::SingularSystem, "tangency system is singular");
  return {TriPoint(x(0), x(1), x(2)), x(3)};
}

ProbeReport grid_scan(const Triangle& t, const WeightTriple& w, double radius, int steps, ProbeMode mode,
                      int refine_passes) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error(Errc::InvalidArgument, "grid radius must be positive");
  if (steps < 10) throw Error(Errc::InvalidArgument, "grid needs at least 10 steps");

  ProbeReport report;
  report.probe_kind = ProbeKind::Grid;
  report.best_value = mode == ProbeMode::Min ? std::numeric_limits<double>::infinity()
                                             : -std::numeric_limits<double>::infinity();

  // Directed distances are affine in the Cartesian position.
  std::array<double, 3> gx{}, gy{}, g0{};
  for (int k = 0; k < 3; ++k) {
    const Vec2 from = t.vertex((k + 1) % 3);
    const Vec2 edge = t.vertex((k + 2) % 3) - from;
    gx[k] = -edge.y / t.side(k);
    gy[k] = edge.x / t.side(k);
    g0[k] = -(gx[k] * from.x + gy[k] * from.y);
  }

  const Vec2 origin = t.circumcenter();
  Vec2 center = origin;
  double half = radius;
  for (int pass = 0; pass <= refine_passes; ++pass) {
    const double h = 2.0 * half / steps;
    Vec2 best_xy = center;
    bool improved = false;
    for (int i = 0; i <= steps; ++i) {
      const double qx = center.x - half + i * h;
      for (int j = 0; j <= steps; ++j) {
        const double qy = center.y - half + j * h;
        const double ox = qx - origin.x, oy = qy - origin.y;
        if (ox * ox + oy * oy > radius * radius) continue;
        double f = 0.0;
        for (int k = 0; k < 3; ++k) {
          const double d = gx[k] * qx + gy[k] * qy + g0[k];
          f += w[k] * d * d;
        }
        ++report.samples;
        if (better(f, report.best_value, mode)) {
          report.best_value = f;
          best_xy = {qx, qy};
          improved = true;
        }
      }
    }
    if (improved) center = best_xy;
    half = 2.0 * h;
  }
  report.best_point = cartesian_to_tri(t, center);
  report.best_value = eval_F(t, w, report.best_point);
  return report;
}

ProbeReport ray_probe(const Triangle& t, const WeightTriple& w, int trials) {
  if (w.zero_count() > 1) throw Error(Errc::InvalidArgument, "ray probe needs at most one zero weight");
  ProbeReport report;
  report.probe_kind = ProbeKind::Ray;

  const auto basis = plane_basis(t);
  std::vector<Vec3> directions;
  // Principal directions of the restricted 2x2 form.
  const double quu = quad_form(w, basis[0]);
  const double qvv = quad_form(w, basis[1]);
  double quv = 0.0;
  for (int k = 0; k < 3; ++k) quv += w[k] * basis[0][k] * basis[1][k];
  const double theta0 = 0.5 * std::atan2(2.0 * quv, quu - qvv);
  for (double theta : {theta0, theta0 + 0.5 * M_PI}) {
    directions.push_back(axpy({std::cos(theta) * basis[0][0], std::cos(theta) * basis[0][1],
                               std::cos(theta) * basis[0][2]},
                              std::sin(theta), basis[1]));
  }
  for (int i = 0; i < std::max(trials, 0); ++i) {
    const double theta = M_PI * i / std::max(trials, 1);
    directions.push_back(axpy({std::cos(theta) * basis[0][0], std::cos(theta) * basis[0][1],
                               std::cos(theta) * basis[0][2]},
                              std::sin(theta), basis[1]));
  }

  const TriPoint start = bary_to_tri(t, BaryPoint(1.0, 1.0, 1.0));
  report.best_point = start;
  report.best_value = eval_F(t, w, start);
  ++report.samples;
  const double scale = w.scale();

  for (const Vec3& d : directions) {
    const double q = quad_form(w, d);
    if (is_zero(q, scale)) continue;
    const bool goes_down = q < 0.0;
    if (goes_down ? report.unbounded_below : report.unbounded_above) continue;
    for (double sgn : {1.0, -1.0}) {
      bool found = false;
      double len = t.circumradius();
      for (int iter = 0; iter < 200 && !found; ++iter, len *= 2.0) {
        const TriPoint p(axpy(start.d, sgn * len, d));
        const double f = eval_F(t, w, p);
        ++report.samples;
        if (f < report.best_value) {
          report.best_value = f;
          report.best_point = p;
        }
        if (goes_down && f < -kUnboundedLevel) {
          report.unbounded_below = true;
          report.witness_below = p;
          found = true;
        } else if (!goes_down && f > kUnboundedLevel) {
          report.unbounded_above = true;
          report.witness_above = p;
          found = true;
        }
      }
      if (found) break;
    }
  }
  return report;
}

std::array<double, 2> fd_gradient(const Triangle& t, const WeightTriple& w, const TriPoint& p, double h) {
  if (!(h > 0.0)) throw Error(Errc::InvalidArgument, "finite-difference step must be positive");
  const auto basis = plane_basis(t);
  std::array<double, 2> g{};
  for (int k = 0; k < 2; ++k) {
    const double plus = eval_F(t, w, TriPoint(axpy(p.d, h, basis[k])));
    const double minus = eval_F(t, w, TriPoint(axpy(p.d, -h, basis[k])));
    g[k] = (plus - minus) / (2.0 * h);
  }
  return g;
}

double InstanceSampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

Triangle InstanceSampler::triangle() {
  for (;;) {
    std::array<double, 3> s{uniform(1.0, 10.0), uniform(1.0, 10.0), uniform(1.0, 10.0)};
    const double longest = *std::max_element(s.begin(), s.end());
    if (longest < s[0] + s[1] + s[2] - longest - 0.05) return Triangle::from_sides(s[0], s[1], s[2]);
  }
}

Triangle InstanceSampler::acute_triangle() {
  for (;;) {
    Triangle t = triangle();
    if (t.conway(0) > 0.0 && t.conway(1) > 0.0 && t.conway(2) > 0.0) return t;
  }
}

WeightTriple InstanceSampler::weights(const Triangle& t) {
  for (;;) {
    std::array<double, 3> w{uniform(-5.0, 5.0), uniform(-5.0, 5.0), uniform(-5.0, 5.0)};
    if (std::abs(w[0]) < 0.01 || std::abs(w[1]) < 0.01 || std::abs(w[2]) < 0.01) continue;
    const BaryPoint m(w);
    if (std::abs(compute_J(t, m)) < 0.01 * J_scale(t, m)) continue;
    return WeightTriple(w);
  }
}

WeightTriple InstanceSampler::zero_sum_weights() {
  for (;;) {
    const double l = uniform(-5.0, 5.0);
    const double m = uniform(-5.0, 5.0);
    const double n = -(l + m);
    if (std::abs(l) < 0.01 || std::abs(m) < 0.01 || std::abs(n) < 0.01) continue;
    return WeightTriple(l, m, n);
  }
}

std::vector<std::string> verify_instance(const Triangle& t, const WeightTriple& w) {
  std::vector<std::string> failures;
  const ExtremumResult r = solve_extremum(t, w);
  const double s2 = 2.0 * t.area();
  const double lemoine = s2 * s2 / (t.a() * t.a() + t.b() * t.b() + t.c() * t.c());

  auto fail = [&](const std::string& what) {
    failures.push_back("case " + r.case_label + ", weights (" + std::to_string(w.l()) + ", " + std::to_string(w.m()) +
                       ", " + std::to_string(w.n()) + "): " + what);
  };

  if (r.kind == ExtremumKind::Min || r.kind == ExtremumKind::Max) {
    const double value = *r.value;
    if (w.zero_count() == 0) {
      try {
        const LagrangeSolution sol = lagrange_solve(t, w);
        if (!canonical_equal(tri_to_bary(t, sol.point), *r.point, 1e-9)) fail("Lagrange point disagrees");
        if (std::abs(sol.multiplier - s2 / *r.J) > 1e-9 * std::abs(s2 / *r.J)) fail("Lagrange multiplier disagrees");
      } catch (const Error& e) {
        fail(std::string("Lagrange solve failed: ") + e.what());
      }
    }
    const TriPoint p = bary_to_tri(t, *r.point);
    const double at_point = eval_F(t, w, p);
    if (std::abs(at_point - value) > 1e-9 * std::max(1.0, std::abs(value))) fail("F at the point differs from value");
    const auto g = fd_gradient(t, w, p, default_fd_step(t));
    if (std::hypot(g[0], g[1]) > 1e-5 * (std::abs(value) + lemoine)) fail("restricted gradient does not vanish");

    const double radius = 6.0 * t.circumradius();
    const Vec2 q = bary_to_cartesian(t, *r.point);
    if (norm(q - t.circumcenter()) < radius) {
      const auto mode = r.kind == ExtremumKind::Min ? ProbeMode::Min : ProbeMode::Max;
      const ProbeReport grid = grid_scan(t, w, radius, 600, mode, kVerifyRefinePasses);
      if (std::abs(grid.best_value - value) > std::max(1e-2, 1e-2 * std::abs(value))) {
        fail("grid optimum " + std::to_string(grid.best_value) + " vs " + std::to_string(value));
      }
      if (better(grid.best_value, value, mode) &&
          std::abs(grid.best_value - value) > 1e-6 * std::max(1.0, std::abs(value))) {
        fail("grid sample beats the reported extremum");
      }
    }
  } else if (r.kind == ExtremumKind::NoExtremum) {
    const ProbeReport rays = ray_probe(t, w, 64);
    if (!rays.unbounded_below || !rays.unbounded_above) fail("ray probe does not show F unbounded both ways");
  }
  return failures;
}

VerifyReport verify_corpus(int trials, std::uint64_t seed, const std::optional<Triangle>& fixed) {
  InstanceSampler sampler(seed);
  struct Item {
    Triangle t;
    WeightTriple w;
  };
  std::vector<Item> corpus;
  corpus.reserve(static_cast<std::size_t>(std::max(trials, 0)));
  for (int i = 0; i < trials; ++i) {
    Triangle t = fixed ? *fixed : sampler.triangle();
    WeightTriple w = sampler.weights(t);
    corpus.push_back({t, w});
  }

  std::vector<std::vector<std::string>> results(corpus.size());
  std::vector<ExtremumKind> kinds(corpus.size());
  std::vector<char> gridded(corpus.size(), 0);
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (unsigned wk = 0; wk < workers; ++wk) {
    jobs.push_back(std::async(std::launch::async, [&, wk] {
      for (std::size_t i = wk; i < corpus.size(); i += workers) {
        const auto& item = corpus[i];
        try {
          const ExtremumResult r = solve_extremum(item.t, item.w);
          kinds[i] = r.kind;
          if (r.point && norm(bary_to_cartesian(item.t, *r.point) - item.t.circumcenter()) <
                             6.0 * item.t.circumradius()) {
            gridded[i] = 1;
          }
          results[i] = verify_instance(item.t, item.w);
        } catch (const std::exception& e) {
          results[i] = {std::string("exception: ") + e.what()};
        }
      }
    }));
  }
  for (auto& j : jobs) j.get();

  VerifyReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (kinds[i] == ExtremumKind::Min || kinds[i] == ExtremumKind::Max) ++report.extremal;
    if (kinds[i] == ExtremumKind::NoExtremum) ++report.nonexistence;
    report.grid_checked += gridded[i];
    for (auto& f : results[i]) report.failures.push_back("trial " + std::to_string(i) + ": " + f);
  }
  return report;
}

}  // namespace trilin::oracle
