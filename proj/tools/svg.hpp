#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mgrecon/geometry.hpp"

namespace mgrecon::tools {

/// Planar drawing: dots, segments between dots, and translucent triangles.
struct SvgScene {
    std::vector<Point> points;
    std::vector<std::array<std::size_t, 2>> lines;
    std::vector<std::array<std::size_t, 3>> fills;
};

struct SvgStyle {
    double width = 800.0;
    double height = 800.0;
    double margin = 24.0;
    double dot_radius = 3.0;
};

/// Deterministic SVG text. The data bounding box is mapped onto the canvas
/// with a uniform scale and the y axis pointing up. Throws
/// std::invalid_argument on non-planar points or out-of-range indices.
std::string render_svg(const SvgScene& scene, const SvgStyle& style = {});

}  // namespace mgrecon::tools
