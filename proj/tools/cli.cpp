#include "trilin/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trilin/centers.hpp"
#include "trilin/conjugate.hpp"
#include "trilin/error.hpp"
#include "trilin/oracle.hpp"
#include "trilin/regions.hpp"
#include "trilin/report.hpp"
#include "trilin/svg.hpp"
#include "trilin/tolerance.hpp"

namespace trilin::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string sides;
  std::string vertices;
  std::string weights;
  std::string point_bary;
  std::string point_tri;
  std::string point_xy;
  std::string name;
  std::string x_center;
  std::string x_bary;
  std::string out_path;
  std::vector<std::string> marks;
  std::optional<double> level;
  std::optional<double> tol;
  int trials = 500;
  std::uint64_t seed = 1;
  bool json_mode = false;
};

double parse_number(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty() || !std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, "'" + text + "' is not a number");
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, char sep) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(parse_number(text.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::array<double, 3> parse_triple(const std::string& text, const char* what) {
  const auto v = parse_list(text, ',');
  if (v.size() != 3) throw Error(Errc::InvalidArgument, std::string(what) + " needs three comma-separated numbers");
  return {v[0], v[1], v[2]};
}

Vec2 parse_pair(const std::string& text, const char* what) {
  const auto v = parse_list(text, ',');
  if (v.size() != 2) throw Error(Errc::InvalidArgument, std::string(what) + " needs two comma-separated numbers");
  return {v[0], v[1]};
}

std::optional<Triangle> parse_triangle(const Options& o) {
  if (!o.sides.empty()) {
    const auto s = parse_triple(o.sides, "--sides");
    return Triangle::from_sides(s[0], s[1], s[2]);
  }
  if (!o.vertices.empty()) {
    std::vector<Vec2> pts;
    std::size_t start = 0;
    for (;;) {
      const std::size_t pos = o.vertices.find(';', start);
      pts.push_back(parse_pair(o.vertices.substr(start, pos - start), "--vertices"));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (pts.size() != 3) throw Error(Errc::InvalidArgument, "--vertices needs three X,Y pairs separated by ';'");
    return Triangle::from_vertices(pts[0], pts[1], pts[2]);
  }
  return std::nullopt;
}

std::optional<BaryPoint> parse_point(const Triangle& t, const Options& o) {
  if (!o.point_bary.empty()) return BaryPoint(parse_triple(o.point_bary, "--point-bary"));
  if (!o.point_tri.empty()) {
    const TriPoint p(parse_triple(o.point_tri, "--point-tri"));
    if (std::abs(constraint_residual(t, p)) > 1e-6 * 2.0 * t.area()) {
      throw Error(Errc::InvalidArgument, "--point-tri does not satisfy ax + by + cz = 2S");
    }
    return tri_to_bary(t, p);
  }
  if (!o.point_xy.empty()) return cartesian_to_bary(t, parse_pair(o.point_xy, "--point-xy"));
  return std::nullopt;
}

// 12 significant digits, printed in the shortest form that round-trips.
double round12(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  double out = 0.0;
  std::from_chars(buf.data(), end, out);
  return out == 0.0 ? 0.0 : out;
}

std::string fmt12(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), round12(v));
  return std::string(buf.data(), end);
}

json num(double v) { return round12(v); }
json num(const std::optional<double>& v) { return v ? json(round12(*v)) : json(nullptr); }

json triple(const std::array<double, 3>& v) { return json::array({num(v[0]), num(v[1]), num(v[2])}); }

std::string triple_text(const std::array<double, 3>& v, const char* sep) {
  return fmt12(v[0]) + sep + fmt12(v[1]) + sep + fmt12(v[2]);
}

// Prints a flat JSON object as aligned "key  value" lines.
void print_human(const json& j, std::ostream& out) {
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << it.key();
    const json& v = it.value();
    if (v.is_null()) {
      out << "-";
    } else if (v.is_string()) {
      out << v.get<std::string>();
    } else if (v.is_array()) {
      const bool numeric = !v.empty() && v.front().is_number();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << (numeric ? " : " : "; ");
        if (v[i].is_number()) {
          out << fmt12(v[i].get<double>());
        } else if (v[i].is_string()) {
          out << v[i].get<std::string>();
        } else {
          out << v[i].dump();
        }
      }
    } else if (v.is_number()) {
      out << fmt12(v.get<double>());
    } else {
      out << v.dump();
    }
    out << '\n';
  }
}

void emit(const json& j, const Options& o, std::ostream& out) {
  if (o.json_mode) {
    out << j.dump() << '\n';
  } else {
    print_human(j, out);
  }
}

json region_json(const std::optional<RegionLabel>& r) { return r ? json(to_string(*r)) : json(nullptr); }

json solve_json(const ExtremumResult& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["value"] = num(r.value);
  if (r.point) j["point_bary"] = triple(r.point->canonical().coords());
  if (r.set_side) j["point_set"] = side_name(*r.set_side);
  j["J"] = num(r.J);
  j["case"] = r.case_label;
  j["region_M"] = region_json(r.region_M);
  j["region_N"] = region_json(r.region_N);
  j["diagnostics"] = r.diagnostics;
  return j;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::PointAtInfinity:
    case Errc::ZeroCoordinate:
    case Errc::VertexUndefined:
    case Errc::NoBound:
    case Errc::SingularSystem:
      return kUndefined;
    case Errc::VerificationFailed:
      return kVerificationFailed;
    default:
      return kInvalidInput;
  }
}

void add_triangle_options(CLI::App* sub, Options& o) {
  auto* sides = sub->add_option("--sides", o.sides, "Side lengths A,B,C");
  auto* verts = sub->add_option("--vertices", o.vertices, "Vertices X1,Y1;X2,Y2;X3,Y3");
  sides->excludes(verts);
  verts->excludes(sides);
  sub->add_flag("--json", o.json_mode, "Emit a single JSON object");
  sub->add_option("--tol", o.tol, "Zero tolerance for sign predicates (default 1e-9)");
}

void add_point_options(CLI::App* sub, Options& o) {
  auto* b = sub->add_option("--point-bary", o.point_bary, "Homogeneous barycentrics L,M,N");
  auto* t = sub->add_option("--point-tri", o.point_tri, "Directed distances X,Y,Z");
  auto* x = sub->add_option("--point-xy", o.point_xy, "Cartesian point PX,PY");
  b->excludes(t)->excludes(x);
  t->excludes(b)->excludes(x);
  x->excludes(b)->excludes(t);
}

Triangle require_triangle(const Options& o) {
  auto t = parse_triangle(o);
  if (!t) throw Error(Errc::InvalidArgument, "a triangle is required (--sides or --vertices)");
  return *t;
}

BaryPoint require_point(const Triangle& t, const Options& o) {
  auto p = parse_point(t, o);
  if (!p) throw Error(Errc::InvalidArgument, "a point is required (--point-bary, --point-tri or --point-xy)");
  return *p;
}

WeightTriple require_weights(const Options& o) {
  if (o.weights.empty()) throw Error(Errc::InvalidArgument, "--weights is required");
  return WeightTriple(parse_triple(o.weights, "--weights"));
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Triangle t = require_triangle(o);
  emit(solve_json(solve_extremum(t, require_weights(o))), o, out);
  return kOk;
}

int cmd_conjugate(const Options& o, std::ostream& out) {
  const Triangle t = require_triangle(o);
  const BaryPoint p = require_point(t, o);
  const BaryPoint q = isogonal(t, p);
  json j;
  j["input_bary"] = triple(p.canonical().coords());
  j["point_bary"] = triple(q.coords());
  j["class"] = q.is_finite() ? "Finite" : "AtInfinity";
  if (!o.json_mode) {
    out << triple_text(q.coords(), ":") << '\n';
    return kOk;
  }
  emit(j, o, out);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Triangle t = require_triangle(o);
  const BaryPoint p = require_point(t, o);
  json j;
  j["region"] = to_string(region_classify(t, p));
  j["J"] = p.zero_count() == 0 ? num(compute_J(t, p)) : json(nullptr);
  j["point_bary"] = triple(p.canonical().coords());
  j["inside_circumcircle"] = inside_circumcircle(t, p);
  j["on_circumcircle"] = on_circumcircle(t, p);
  emit(j, o, out);
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Triangle t = require_triangle(o);
  const WeightTriple w = require_weights(o);
  const TriPoint p = bary_to_tri(t, require_point(t, o));
  json j;
  j["F"] = num(eval_F(t, w, p));
  j["point_tri"] = triple(p.d);
  emit(j, o, out);
  return kOk;
}

int cmd_center(const Options& o, std::ostream& out) {
  const Triangle t = require_triangle(o);
  if (o.name.empty()) throw Error(Errc::InvalidArgument, "--name is required");
  const BaryPoint p = named_center(t, o.name);
  json j;
  j["name"] = o.name;
  j["point_bary"] = triple(p.canonical().coords());
  if (p.is_finite()) {
    const Vec2 q = bary_to_cartesian(t, p);
    j["point_tri"] = triple(bary_to_tri(t, p).d);
    j["point_xy"] = json::array({num(q.x), num(q.y)});
  }
  emit(j, o, out);
  return kOk;
}

int cmd_inequality(const Options& o, std::ostream& out) {
  const Triangle t = require_triangle(o);
  const WeightTriple w = require_weights(o);
  std::optional<BaryPoint> x;
  if (!o.x_center.empty()) x = named_center(t, o.x_center);
  if (!o.x_bary.empty()) x = BaryPoint(parse_triple(o.x_bary, "--x-bary"));
  if (!x) throw Error(Errc::InvalidArgument, "--x-center or --x-bary is required");
  const InequalityReport r = inequality_report(t, w, *x);
  json j;
  j["kind"] = to_string(r.kind);
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["slack"] = num(r.slack);
  j["tight"] = r.tight;
  j["M"] = triple(r.M.canonical().coords());
  j["X"] = triple(r.X.canonical().coords());
  j["N"] = triple(r.N.canonical().coords());
  j["J"] = num(r.J);
  j["case"] = r.case_label;
  emit(j, o, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw Error(Errc::InvalidArgument, "--trials must be positive");
  const auto fixed = parse_triangle(o);
  const oracle::VerifyReport r = oracle::verify_corpus(o.trials, o.seed, fixed);
  json j;
  j["trials"] = r.trials;
  j["extremal"] = r.extremal;
  j["grid_checked"] = r.grid_checked;
  j["nonexistence"] = r.nonexistence;
  j["ok"] = r.ok();
  j["failures"] = r.failures;
  emit(j, o, out);
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Triangle t = require_triangle(o);
  if (o.out_path.empty()) throw Error(Errc::InvalidArgument, "--out is required");
  std::optional<WeightTriple> w;
  if (!o.weights.empty()) w = require_weights(o);
  if (o.level && !w) throw Error(Errc::InvalidArgument, "--level needs --weights");
  std::vector<Annotation> marks;
  for (const auto& name : o.marks) {
    const BaryPoint p = named_center(t, name);
    if (p.is_finite()) marks.push_back({bary_to_cartesian(t, p), name});
  }
  if (auto p = parse_point(t, o); p && p->is_finite()) marks.push_back({bary_to_cartesian(t, *p), "P"});
  render_svg_file(t, marks, o.level, w, o.out_path);
  json j;
  j["out"] = o.out_path;
  j["markers"] = static_cast<int>(marks.size());
  j["level"] = num(o.level);
  emit(j, o, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Extrema of weighted sums of squared distances to the sidelines of a triangle", "trilin"};
  app.require_subcommand(1, 1);

  auto* solve = app.add_subcommand("solve", "Classify and locate the extremum of F");
  add_triangle_options(solve, o);
  solve->add_option("--weights", o.weights, "Weights L,M,N")->required();

  auto* conjugate = app.add_subcommand("conjugate", "Isogonal conjugate of a point");
  add_triangle_options(conjugate, o);
  add_point_options(conjugate, o);

  auto* classify = app.add_subcommand("classify", "Region of a point and its J");
  add_triangle_options(classify, o);
  add_point_options(classify, o);

  auto* eval = app.add_subcommand("eval", "Evaluate F at a point");
  add_triangle_options(eval, o);
  add_point_options(eval, o);
  eval->add_option("--weights", o.weights, "Weights L,M,N")->required();

  auto* center = app.add_subcommand("center", "Named triangle center");
  add_triangle_options(center, o);
  center->add_option("--name", o.name, "centroid|incenter|circumcenter|orthocenter|symmedian")->required();

  auto* inequality = app.add_subcommand("inequality", "Inequality F(X) against the extremal bound");
  add_triangle_options(inequality, o);
  inequality->add_option("--weights", o.weights, "Weights L,M,N")->required();
  auto* xc = inequality->add_option("--x-center", o.x_center, "Named center for X");
  auto* xb = inequality->add_option("--x-bary", o.x_bary, "Barycentrics of X");
  xc->excludes(xb);
  xb->excludes(xc);

  auto* verify = app.add_subcommand("verify", "Cross-check the solver against numeric oracles");
  add_triangle_options(verify, o);
  verify->add_option("--trials", o.trials, "Number of random instances");
  verify->add_option("--seed", o.seed, "Seed of the instance generator");

  auto* render = app.add_subcommand("render", "Write an SVG figure");
  add_triangle_options(render, o);
  add_point_options(render, o);
  render->add_option("--out", o.out_path, "Output SVG file")->required();
  render->add_option("--level", o.level, "Level value of the traced curve F = V");
  render->add_option("--weights", o.weights, "Weights L,M,N");
  render->add_option("--mark", o.marks, "Named centers to mark");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    std::optional<ScopedTolerance> tol;
    if (o.tol) tol.emplace(*o.tol);
    if (*solve) return cmd_solve(o, out);
    if (*conjugate) return cmd_conjugate(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*center) return cmd_center(o, out);
    if (*inequality) return cmd_inequality(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace trilin::cli
