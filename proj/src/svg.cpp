#include "lsl/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "lsl/errors.hpp"

namespace lsl {

namespace {

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

Vec2d svg_position(const GeomGraph& g, int i) {
  const Vec2d e = embed(g.kind(), g.section().point(i));
  return {e.x * kSvgScale, -e.y * kSvgScale};
}

std::string render_svg(const GeomGraph& g, const std::optional<PathWitness>& highlight) {
  const int n = static_cast<int>(g.vertex_count());
  if (highlight) {
    const auto& path = highlight->vertices;
    for (int v : path) {
      if (v < 0 || v >= n) throw UsageError("highlighted vertex " + std::to_string(v) + " is not in the graph");
    }
    for (std::size_t k = 1; k < path.size(); ++k) {
      if (!g.has_edge(path[k - 1], path[k])) {
        throw UsageError("highlighted step " + std::to_string(path[k - 1]) + "-" + std::to_string(path[k]) +
                         " is not an edge");
      }
    }
  }

  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2d p = svg_position(g, i);
    if (i == 0) {
      x0 = x1 = p.x;
      y0 = y1 = p.y;
    }
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double pad = 0.05 * std::max({x1 - x0, y1 - y0, kSvgScale});

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0 - pad) + " " + num(y0 - pad) + " " +
         num(x1 - x0 + 2 * pad) + " " + num(y1 - y0 + 2 * pad) + "\">\n";

  out += "<g id=\"edges\" stroke=\"#555555\" stroke-width=\"1\">\n";
  for (const Edge& e : g.edges()) {
    const Vec2d a = svg_position(g, e.i);
    const Vec2d b = svg_position(g, e.j);
    out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"witness\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\">\n";
  if (highlight && !highlight->vertices.empty()) {
    out += "<polyline points=\"";
    bool first = true;
    for (int v : highlight->vertices) {
      const Vec2d p = svg_position(g, v);
      if (!first) out += " ";
      out += num(p.x) + "," + num(p.y);
      first = false;
    }
    out += "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"vertices\" fill=\"#1f4e79\">\n";
  for (int i = 0; i < n; ++i) {
    const Vec2d p = svg_position(g, i);
    out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"3\"/>\n";
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace lsl
