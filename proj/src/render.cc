#include "convex_blockers/render.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace convex_blockers {
namespace {

constexpr double kCanvas = 600.0;
constexpr double kCenter = kCanvas / 2;
constexpr double kRadius = 250.0;
constexpr double kLabelRadius = 276.0;

std::string Fixed(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string out(buf);
  if (out == "-0.000") out = "0.000";
  return out;
}

struct Point {
  double x;
  double y;
};

Point VertexPosition(int m, Vertex v, double radius) {
  const double angle = std::numbers::pi / 2 + v * std::numbers::pi / m;
  // SVG y grows downwards, so counterclockwise means subtracting sin.
  return {kCenter + radius * std::cos(angle), kCenter - radius * std::sin(angle)};
}

const char* StyleAttributes(EdgeStyle style) {
  switch (style) {
    case EdgeStyle::kDotted:
      return R"(stroke="#555555" stroke-width="1.500" stroke-dasharray="3.000,5.000")";
    case EdgeStyle::kSolid:
      return R"(stroke="#000000" stroke-width="2.500")";
    case EdgeStyle::kThick:
      return R"(stroke="#000000" stroke-width="5.000")";
  }
  return "";
}

}  // namespace

std::string RenderFigure(const RenderSpec& spec) {
  const PolygonContext ctx(spec.m);
  std::map<Edge, EdgeStyle> styled;
  for (const EdgeLayer& layer : spec.layers) {
    for (const Edge& e : layer.edges) {
      ctx.Validate(e);
      auto [it, inserted] = styled.emplace(e, layer.style);
      if (!inserted && it->second < layer.style) it->second = layer.style;
    }
  }

  std::ostringstream svg;
  svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
      << R"(<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600">)"
      << '\n'
      << R"(<rect x="0" y="0" width="600" height="600" fill="#ffffff"/>)" << '\n';

  svg << R"(<polygon points=")";
  for (Vertex v = 0; v < ctx.n(); ++v) {
    const Point p = VertexPosition(spec.m, v, kRadius);
    svg << (v ? " " : "") << Fixed(p.x) << ',' << Fixed(p.y);
  }
  svg << R"(" fill="none" stroke="#aaaaaa" stroke-width="1.000"/>)" << '\n';

  for (EdgeStyle style : {EdgeStyle::kDotted, EdgeStyle::kSolid, EdgeStyle::kThick}) {
    for (const auto& [e, s] : styled) {
      if (s != style) continue;
      const Point p = VertexPosition(spec.m, e.a, kRadius);
      const Point q = VertexPosition(spec.m, e.b, kRadius);
      svg << "<line x1=\"" << Fixed(p.x) << "\" y1=\"" << Fixed(p.y)
          << "\" x2=\"" << Fixed(q.x) << "\" y2=\"" << Fixed(q.y) << "\" "
          << StyleAttributes(style) << " stroke-linecap=\"round\"/>\n";
    }
  }

  for (Vertex v = 0; v < ctx.n(); ++v) {
    const Point p = VertexPosition(spec.m, v, kRadius);
    svg << "<circle cx=\"" << Fixed(p.x) << "\" cy=\"" << Fixed(p.y)
        << R"(" r="4.000" fill="#000000"/>)" << '\n';
  }
  if (spec.vertex_labels) {
    for (Vertex v = 0; v < ctx.n(); ++v) {
      const Point p = VertexPosition(spec.m, v, kLabelRadius);
      svg << "<text x=\"" << Fixed(p.x) << "\" y=\"" << Fixed(p.y)
          << R"(" font-family="sans-serif" font-size="16" text-anchor="middle" dominant-baseline="central">)"
          << v << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace convex_blockers
