#pragma once

// Deterministic SVG rendering of cone graphs: points as circles, directed
// edges as arrows colored by cone index, optional role labels and an
// optional cone-wedge overlay at one vertex.

#include <array>
#include <string>

#include "conespan/graph.hpp"
#include "conespan/io.hpp"

namespace conespan {

struct SvgOptions {
    int cones_at = -1;         // vertex id for the cone overlay; -1 disables
    bool show_labels = true;   // draw role labels when a label map is given
    double width = 800.0;      // canvas width in px; height follows the bbox
};

namespace detail {

inline const char* cone_color(int cone) {
    static constexpr std::array<const char*, 12> palette = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#393b79", "#637939"};
    return palette[static_cast<std::size_t>((cone - 1) % static_cast<int>(palette.size()))];
}

inline std::string num(double v) {
    // Round tiny values so -0 and 1e-18 artifacts do not leak into output.
    if (std::abs(v) < 1e-12) v = 0.0;
    return format_double(v);
}

}  // namespace detail

inline std::string render_svg(const ConeGraph& g, const SvgOptions& options = {},
                              const std::map<std::string, int>& labels = {}) {
    double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
    if (g.points.size() > 0) {
        min_x = max_x = g.points[0].x;
        min_y = max_y = g.points[0].y;
        for (const Point& p : g.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    double span_x = max_x - min_x, span_y = max_y - min_y;
    if (span_x <= 0.0) span_x = 1.0;
    if (span_y <= 0.0) span_y = 1.0;
    const double margin_x = 0.05 * span_x, margin_y = 0.05 * span_y;
    min_x -= margin_x;
    min_y -= margin_y;
    span_x += 2.0 * margin_x;
    span_y += 2.0 * margin_y;

    const double scale = options.width / span_x;
    const double height = span_y * scale;
    // SVG y grows downward; flip.
    auto sx = [&](double x) { return (x - min_x) * scale; };
    auto sy = [&](double y) { return height - (y - min_y) * scale; };

    const double diag = std::hypot(options.width, height);
    const double arrow = 0.02 * diag;
    const double point_radius = 0.006 * diag;

    std::map<int, std::string> role_of;
    for (const auto& [name, id] : labels) role_of[id] = name;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + detail::num(options.width) +
           " " + detail::num(height) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (options.cones_at >= 0 && options.cones_at < g.points.size()) {
        const Point& apex = g.points[options.cones_at];
        const double reach = 0.3 * diag;
        svg += "  <g class=\"cones\" opacity=\"0.3\">\n";
        for (int cone = 1; cone <= g.sys.k; ++cone) {
            const double a0 = g.sys.clockwise_boundary_angle(cone);
            const double a1 = a0 + g.sys.theta;
            const double cx = sx(apex.x), cy = sy(apex.y);
            const double x0 = cx + reach * std::cos(a0), y0 = cy - reach * std::sin(a0);
            const double x1 = cx + reach * std::cos(a1), y1 = cy - reach * std::sin(a1);
            svg += "    <path d=\"M " + detail::num(cx) + " " + detail::num(cy) + " L " +
                   detail::num(x0) + " " + detail::num(y0) + " A " + detail::num(reach) + " " +
                   detail::num(reach) + " 0 0 0 " + detail::num(x1) + " " + detail::num(y1) +
                   " Z\" fill=\"" + detail::cone_color(cone) + "\" stroke=\"none\"/>\n";
        }
        svg += "  </g>\n";
    }

    svg += "  <g class=\"edges\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (const DirectedEdge& e : g.edges) {
        const Point& u = g.points[e.src];
        const Point& v = g.points[e.dst];
        const double x1 = sx(u.x), y1 = sy(u.y), x2 = sx(v.x), y2 = sy(v.y);
        const char* color = detail::cone_color(e.cone_at_src);
        svg += "    <line x1=\"" + detail::num(x1) + "\" y1=\"" + detail::num(y1) + "\" x2=\"" +
               detail::num(x2) + "\" y2=\"" + detail::num(y2) + "\" stroke=\"" + color + "\"/>\n";
        // Arrowhead: small triangle pulled back from the target point.
        const double len = std::hypot(x2 - x1, y2 - y1);
        if (len > 1e-9) {
            const double ux = (x2 - x1) / len, uy = (y2 - y1) / len;
            const double bx = x2 - ux * (point_radius + arrow), by = y2 - uy * (point_radius + arrow);
            const double tipx = x2 - ux * point_radius, tipy = y2 - uy * point_radius;
            const double px = -uy * arrow * 0.35, py = ux * arrow * 0.35;
            svg += "    <polygon points=\"" + detail::num(tipx) + "," + detail::num(tipy) + " " +
                   detail::num(bx + px) + "," + detail::num(by + py) + " " + detail::num(bx - px) +
                   "," + detail::num(by - py) + "\" fill=\"" + color + "\" stroke=\"none\"/>\n";
        }
    }
    svg += "  </g>\n";

    svg += "  <g class=\"points\" fill=\"#111111\">\n";
    for (const Point& p : g.points) {
        svg += "    <circle cx=\"" + detail::num(sx(p.x)) + "\" cy=\"" + detail::num(sy(p.y)) +
               "\" r=\"" + detail::num(point_radius) + "\"/>\n";
    }
    svg += "  </g>\n";

    if (options.show_labels && !role_of.empty()) {
        svg += "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"" +
               detail::num(0.018 * diag) + "\" fill=\"#333333\">\n";
        for (const Point& p : g.points) {
            auto it = role_of.find(p.id);
            if (it == role_of.end()) continue;
            svg += "    <text x=\"" + detail::num(sx(p.x) + 1.5 * point_radius) + "\" y=\"" +
                   detail::num(sy(p.y) - 1.5 * point_radius) + "\">" + it->second + "</text>\n";
        }
        svg += "  </g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace conespan
