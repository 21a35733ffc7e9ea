#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "netstrings/fit.hpp"

namespace netstrings {

// Minimal static SVG scatter/line charts: no external plotting dependency,
// data fidelity over styling. Output is valid XML referencing only the
// supplied points.
struct Series {
    std::string label;
    std::vector<Point> points;
    bool draw_line = true;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    std::optional<double> horizontal_line; // e.g. the Milgram threshold at 0
};

namespace detail {

inline std::string xml_escape(const std::string& text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string svg_num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", v);
    return std::string(buffer);
}

inline const char* series_color(std::size_t index) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return palette[index % (sizeof palette / sizeof palette[0])];
}

} // namespace detail

inline std::string render_chart(const ChartSpec& spec) {
    constexpr double width = 640.0;
    constexpr double height = 480.0;
    constexpr double margin_left = 70.0;
    constexpr double margin_right = 150.0;
    constexpr double margin_top = 40.0;
    constexpr double margin_bottom = 55.0;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool have_point = false;
    for (const Series& s : spec.series) {
        for (const Point& p : s.points) {
            if (std::isnan(p.x) || std::isnan(p.y)) continue;
            if (!have_point) {
                x_min = x_max = p.x;
                y_min = y_max = p.y;
                have_point = true;
            }
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
    }
    if (spec.horizontal_line) {
        y_min = std::min(y_min, *spec.horizontal_line);
        y_max = std::max(y_max, *spec.horizontal_line);
    }
    if (x_max == x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (y_max == y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    const double x_pad = 0.05 * (x_max - x_min);
    const double y_pad = 0.05 * (y_max - y_min);
    x_min -= x_pad;
    x_max += x_pad;
    y_min -= y_pad;
    y_max += y_pad;

    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;
    auto sx = [&](double x) { return margin_left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return margin_top + (y_max - y) / (y_max - y_min) * plot_h; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    svg += "<text x=\"" + detail::svg_num(width / 2) + "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" +
           detail::xml_escape(spec.title) + "</text>\n";

    // Frame and ticks.
    svg += "<rect x=\"" + detail::svg_num(margin_left) + "\" y=\"" + detail::svg_num(margin_top) +
           "\" width=\"" + detail::svg_num(plot_w) + "\" height=\"" + detail::svg_num(plot_h) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    constexpr int n_ticks = 5;
    for (int t = 0; t <= n_ticks; ++t) {
        const double fx = x_min + (x_max - x_min) * t / n_ticks;
        const double fy = y_min + (y_max - y_min) * t / n_ticks;
        const double px = sx(fx);
        const double py = sy(fy);
        char label[32];
        svg += "<line x1=\"" + detail::svg_num(px) + "\" y1=\"" +
               detail::svg_num(margin_top + plot_h) + "\" x2=\"" + detail::svg_num(px) +
               "\" y2=\"" + detail::svg_num(margin_top + plot_h + 5) + "\" stroke=\"black\"/>\n";
        std::snprintf(label, sizeof label, "%.3g", fx);
        svg += "<text x=\"" + detail::svg_num(px) + "\" y=\"" +
               detail::svg_num(margin_top + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + label +
               "</text>\n";
        svg += "<line x1=\"" + detail::svg_num(margin_left - 5) + "\" y1=\"" + detail::svg_num(py) +
               "\" x2=\"" + detail::svg_num(margin_left) + "\" y2=\"" + detail::svg_num(py) +
               "\" stroke=\"black\"/>\n";
        std::snprintf(label, sizeof label, "%.3g", fy);
        svg += "<text x=\"" + detail::svg_num(margin_left - 8) + "\" y=\"" +
               detail::svg_num(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + label +
               "</text>\n";
    }
    svg += "<text x=\"" + detail::svg_num(margin_left + plot_w / 2) + "\" y=\"" +
           detail::svg_num(height - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           detail::xml_escape(spec.x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + detail::svg_num(margin_top + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " +
           detail::svg_num(margin_top + plot_h / 2) + ")\">" + detail::xml_escape(spec.y_label) +
           "</text>\n";

    if (spec.horizontal_line) {
        const double py = sy(*spec.horizontal_line);
        svg += "<line x1=\"" + detail::svg_num(margin_left) + "\" y1=\"" + detail::svg_num(py) +
               "\" x2=\"" + detail::svg_num(margin_left + plot_w) + "\" y2=\"" +
               detail::svg_num(py) + "\" stroke=\"black\" stroke-dasharray=\"6 4\"/>\n";
    }

    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        const Series& series = spec.series[s];
        const char* color = detail::series_color(s);
        if (series.draw_line && series.points.size() > 1) {
            std::string poly;
            for (const Point& p : series.points) {
                if (std::isnan(p.x) || std::isnan(p.y)) continue;
                if (!poly.empty()) poly += ' ';
                poly += detail::svg_num(sx(p.x)) + "," + detail::svg_num(sy(p.y));
            }
            if (!poly.empty())
                svg += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"" + color +
                       "\" stroke-width=\"1.5\"/>\n";
        }
        for (const Point& p : series.points) {
            if (std::isnan(p.x) || std::isnan(p.y)) continue;
            svg += "<circle cx=\"" + detail::svg_num(sx(p.x)) + "\" cy=\"" +
                   detail::svg_num(sy(p.y)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
        const double ly = margin_top + 16.0 + 18.0 * static_cast<double>(s);
        svg += "<circle cx=\"" + detail::svg_num(width - margin_right + 14) + "\" cy=\"" +
               detail::svg_num(ly - 4) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
        svg += "<text x=\"" + detail::svg_num(width - margin_right + 24) + "\" y=\"" +
               detail::svg_num(ly) + "\" font-family=\"sans-serif\" font-size=\"12\">" +
               detail::xml_escape(series.label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace netstrings
