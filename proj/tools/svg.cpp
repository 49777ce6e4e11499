#include "svg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace mgrecon::tools {

std::string render_svg(const SvgScene& scene, const SvgStyle& style)
{
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const Point& p : scene.points) {
        if (p.dim() != 2)
            throw std::invalid_argument(fmt::format("render: points must be planar, got dimension {}", p.dim()));
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    }
    const auto check = [&](std::size_t i) {
        if (i >= scene.points.size())
            throw std::invalid_argument(
                fmt::format("render: vertex index {} out of range ({} points)", i, scene.points.size()));
    };
    for (const auto& l : scene.lines)
        for (std::size_t i : l)
            check(i);
    for (const auto& f : scene.fills)
        for (std::size_t i : f)
            check(i);

    const double span = scene.points.empty() ? 1.0 : std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double scale = std::min(style.width, style.height) - 2.0 * style.margin;
    const auto sx = [&](const Point& p) { return style.margin + (p[0] - min_x) / span * scale; };
    const auto sy = [&](const Point& p) { return style.height - style.margin - (p[1] - min_y) / span * scale; };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        style.width, style.height);
    out += "<g fill=\"#3b7dd8\" fill-opacity=\"0.25\" stroke=\"none\">\n";
    for (const auto& [a, b, c] : scene.fills) {
        const Point& p = scene.points[a];
        const Point& q = scene.points[b];
        const Point& r = scene.points[c];
        out += fmt::format("<polygon points=\"{:.3f},{:.3f} {:.3f},{:.3f} {:.3f},{:.3f}\"/>\n", sx(p), sy(p), sx(q),
                           sy(q), sx(r), sy(r));
    }
    out += "</g>\n<g stroke=\"#333333\" stroke-width=\"1.2\">\n";
    for (const auto& [a, b] : scene.lines) {
        const Point& p = scene.points[a];
        const Point& q = scene.points[b];
        out += fmt::format("<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/>\n", sx(p), sy(p), sx(q),
                           sy(q));
    }
    out += "</g>\n<g fill=\"#c0392b\">\n";
    for (const Point& p : scene.points)
        out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{}\"/>\n", sx(p), sy(p), style.dot_radius);
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace mgrecon::tools
