#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trilin/extremum.hpp"

namespace trilin {

struct Annotation {
  Vec2 point;
  std::string label;
};

struct Box {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
};

struct Polyline {
  std::vector<Vec2> points;
  bool closed = false;
};

/// [-R, a+R] x [-R, 2R], widened to contain the circumcircle and vertices
/// when the embedding is not the canonical one.
Box figure_box(const Triangle& t);

inline constexpr int kLevelSamples = 512;

/// Marching squares over a samples x samples lattice of F - level, with
/// linear interpolation on sign-changing edges, chained into polylines.
std::vector<Polyline> trace_level_set(const Triangle& t, const WeightTriple& w, double level, const Box& box,
                                      int samples = kLevelSamples);

/// Standalone SVG 1.1: triangle, circumcircle, optional level curve
/// {F = level} and labeled markers. Byte-identical for identical inputs.
void render_svg(const Triangle& t, const std::vector<Annotation>& annotations, std::optional<double> level,
                const std::optional<WeightTriple>& w, std::ostream& out);

/// Writes to a file; throws IoFailure.
void render_svg_file(const Triangle& t, const std::vector<Annotation>& annotations, std::optional<double> level,
                     const std::optional<WeightTriple>& w, const std::string& path);

}  // namespace trilin
