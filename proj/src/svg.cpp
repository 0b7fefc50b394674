#include "trilin/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <unordered_map>

#include "trilin/error.hpp"

namespace trilin {
namespace {

constexpr double kWidthPx = 800.0;

std::string num(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 3);
  std::string s(buf.data(), end);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string xml_escape(const std::string& in) {
  std::string out;
  for (char ch : in) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Frame {
  Box box;
  double scale;
  double height;

  double px(double x) const { return scale * (x - box.xmin); }
  double py(double y) const { return scale * (box.ymax - y); }
};

// Segments joining crossing points on lattice edges; an edge id identifies
// the shared endpoint of neighbouring segments.
struct Segment {
  long e0, e1;
  Vec2 p0, p1;
};

}  // namespace

Box figure_box(const Triangle& t) {
  const double r = t.circumradius();
  Box b{-r, t.a() + r, -r, 2.0 * r};
  const Vec2 o = t.circumcenter();
  b.xmin = std::min(b.xmin, o.x - r);
  b.xmax = std::max(b.xmax, o.x + r);
  b.ymin = std::min(b.ymin, o.y - r);
  b.ymax = std::max(b.ymax, o.y + r);
  for (const Vec2& v : t.vertices()) {
    b.xmin = std::min(b.xmin, v.x);
    b.xmax = std::max(b.xmax, v.x);
    b.ymin = std::min(b.ymin, v.y);
    b.ymax = std::max(b.ymax, v.y);
  }
  return b;
}

std::vector<Polyline> trace_level_set(const Triangle& t, const WeightTriple& w, double level, const Box& box,
                                      int samples) {
  if (samples < 2) throw Error(Errc::InvalidArgument, "level tracing needs at least 2 samples per axis");
  const int n = samples;
  const double hx = (box.xmax - box.xmin) / (n - 1);
  const double hy = (box.ymax - box.ymin) / (n - 1);
  auto at = [&](int i, int j) { return Vec2{box.xmin + i * hx, box.ymin + j * hy}; };

  std::vector<double> g(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(j) * n + i] = eval_F(t, w, cartesian_to_tri(t, at(i, j))) - level;
  }
  auto val = [&](int i, int j) { return g[static_cast<std::size_t>(j) * n + i]; };

  const long nn = static_cast<long>(n) * n;
  auto h_edge = [&](int i, int j) { return static_cast<long>(j) * n + i; };
  auto v_edge = [&](int i, int j) { return nn + static_cast<long>(j) * n + i; };
  auto cross_point = [&](int i0, int j0, int i1, int j1) {
    const double g0 = val(i0, j0), g1 = val(i1, j1);
    const double s = g0 / (g0 - g1);
    const Vec2 p0 = at(i0, j0), p1 = at(i1, j1);
    return p0 + s * (p1 - p0);
  };

  std::vector<Segment> segments;
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      const double c0 = val(i, j), c1 = val(i + 1, j), c2 = val(i + 1, j + 1), c3 = val(i, j + 1);
      const int code = (c0 > 0 ? 1 : 0) | (c1 > 0 ? 2 : 0) | (c2 > 0 ? 4 : 0) | (c3 > 0 ? 8 : 0);
      if (code == 0 || code == 15) continue;
      // Edges: 0 bottom, 1 right, 2 top, 3 left.
      const std::array<long, 4> id{h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)};
      auto point = [&](int e) {
        switch (e) {
          case 0: return cross_point(i, j, i + 1, j);
          case 1: return cross_point(i + 1, j, i + 1, j + 1);
          case 2: return cross_point(i, j + 1, i + 1, j + 1);
          default: return cross_point(i, j, i, j + 1);
        }
      };
      auto emit = [&](int ea, int eb) { segments.push_back({id[ea], id[eb], point(ea), point(eb)}); };
      const bool center_positive = (c0 + c1 + c2 + c3) > 0.0;
      switch (code) {
        case 1: case 14: emit(3, 0); break;
        case 2: case 13: emit(0, 1); break;
        case 3: case 12: emit(3, 1); break;
        case 4: case 11: emit(1, 2); break;
        case 6: case 9: emit(0, 2); break;
        case 7: case 8: emit(3, 2); break;
        case 5:
          if (center_positive) { emit(3, 2); emit(0, 1); } else { emit(3, 0); emit(1, 2); }
          break;
        case 10:
          if (center_positive) { emit(3, 0); emit(1, 2); } else { emit(3, 2); emit(0, 1); }
          break;
        default: break;
      }
    }
  }

  std::unordered_map<long, std::array<int, 2>> by_edge;
  by_edge.reserve(segments.size() * 2);
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    for (long e : {segments[s].e0, segments[s].e1}) {
      auto [it, inserted] = by_edge.try_emplace(e, std::array<int, 2>{-1, -1});
      (it->second[0] < 0 ? it->second[0] : it->second[1]) = s;
    }
  }
  auto other = [&](long e, int s) {
    const auto& pair = by_edge.at(e);
    return pair[0] == s ? pair[1] : pair[0];
  };

  std::vector<char> used(segments.size(), 0);
  std::vector<Polyline> lines;
  // Open chains start at an end with a single segment; closed loops remain.
  auto walk = [&](int s, long start_edge) {
    Polyline line;
    long edge = start_edge;
    line.points.push_back(segments[s].e0 == edge ? segments[s].p0 : segments[s].p1);
    while (s >= 0 && !used[s]) {
      used[s] = 1;
      const Segment& seg = segments[s];
      const bool forward = seg.e0 == edge;
      line.points.push_back(forward ? seg.p1 : seg.p0);
      edge = forward ? seg.e1 : seg.e0;
      s = other(edge, s);
    }
    line.closed = edge == start_edge && line.points.size() > 2;
    if (line.closed) line.points.pop_back();
    lines.push_back(std::move(line));
  };
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    if (used[s]) continue;
    for (long e : {segments[s].e0, segments[s].e1}) {
      if (other(e, s) < 0) {
        walk(s, e);
        break;
      }
    }
  }
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    if (!used[s]) walk(s, segments[s].e0);
  }
  return lines;
}

void render_svg(const Triangle& t, const std::vector<Annotation>& annotations, std::optional<double> level,
                const std::optional<WeightTriple>& w, std::ostream& out) {
  for (const auto& a : annotations) {
    if (!std::isfinite(a.point.x) || !std::isfinite(a.point.y)) {
      throw Error(Errc::InvalidArgument, "annotation '" + a.label + "' is not a finite point");
    }
  }
  const Box box = figure_box(t);
  const double scale = kWidthPx / (box.xmax - box.xmin);
  const Frame f{box, scale, scale * (box.ymax - box.ymin)};

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidthPx) << "\" height=\""
      << num(f.height) << "\" viewBox=\"0 0 " << num(kWidthPx) << ' ' << num(f.height) << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << num(kWidthPx) << "\" height=\"" << num(f.height)
      << "\" fill=\"white\"/>\n";

  const Vec2 o = t.circumcenter();
  out << "  <circle cx=\"" << num(f.px(o.x)) << "\" cy=\"" << num(f.py(o.y)) << "\" r=\""
      << num(scale * t.circumradius()) << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  out << "  <polygon points=\"";
  for (int k = 0; k < 3; ++k) {
    out << (k ? " " : "") << num(f.px(t.vertex(k).x)) << ',' << num(f.py(t.vertex(k).y));
  }
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (int k = 0; k < 3; ++k) {
    out << "  <text x=\"" << num(f.px(t.vertex(k).x) + 4.0) << "\" y=\"" << num(f.py(t.vertex(k).y) - 4.0)
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << vertex_name(k) << "</text>\n";
  }

  if (level && w) {
    const auto lines = trace_level_set(t, *w, *level, box);
    out << "  <path class=\"level\" d=\"";
    bool first = true;
    for (const auto& line : lines) {
      for (std::size_t i = 0; i < line.points.size(); ++i) {
        out << (first ? "" : " ") << (i == 0 ? 'M' : 'L') << num(f.px(line.points[i].x)) << ','
            << num(f.py(line.points[i].y));
        first = false;
      }
      if (line.closed) out << " Z";
    }
    out << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n";
  }

  for (const auto& a : annotations) {
    out << "  <g class=\"marker\"><circle cx=\"" << num(f.px(a.point.x)) << "\" cy=\"" << num(f.py(a.point.y))
        << "\" r=\"3\" fill=\"#d62728\"/><text x=\"" << num(f.px(a.point.x) + 5.0) << "\" y=\""
        << num(f.py(a.point.y) - 5.0) << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(a.label)
        << "</text></g>\n";
  }
  out << "</svg>\n";
}

void render_svg_file(const Triangle& t, const std::vector<Annotation>& annotations, std::optional<double> level,
                     const std::optional<WeightTriple>& w, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::IoFailure, "cannot open '" + path + "' for writing");
  render_svg(t, annotations, level, w, file);
  file.flush();
  if (!file) throw Error(Errc::IoFailure, "failed writing '" + path + "'");
}

}  // namespace trilin
