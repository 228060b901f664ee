#pragma once

#include <optional>
#include <string>

#include "lsl/graph.hpp"
#include "lsl/stretch.hpp"

namespace lsl {

inline constexpr double kSvgScale = 40.0;  // SVG units per lattice step

/// SVG drawing of the embedded graph: edges, then the highlighted path as a
/// bold polyline, then vertices. The y axis points up. Throws UsageError if
/// the highlight names a vertex outside the graph or a non-edge step.
std::string render_svg(const GeomGraph& g, const std::optional<PathWitness>& highlight = std::nullopt);

/// SVG coordinates of vertex i.
Vec2d svg_position(const GeomGraph& g, int i);

}  // namespace lsl
