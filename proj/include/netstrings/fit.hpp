#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "netstrings/errors.hpp"

namespace netstrings {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class FitModel { linear, log_linear };

// Ordinary least squares result.
//   linear:     Y = A X + B   with coeff_1 = A, coeff_2 = B, derived c = A ln 10
//               (so M_q ~ exp(c * sum of C(p))).
//   log_linear: Y = D log10 X + E with coeff_1 = D, coeff_2 = E, derived d = -D
//               (so M_q ~ (sum of C(p))^-d).
// constant_fit marks SStot = 0 (all y equal), reported as r_squared = 1.
struct FitResult {
    FitModel model = FitModel::linear;
    double coeff_1 = 0.0;
    double coeff_2 = 0.0;
    double r_squared = 0.0;
    double derived = 0.0;
    int n_points = 0;
    bool constant_fit = false;
};

namespace detail {

inline FitResult ols(std::span<const Point> points, FitModel model) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw fit_error("fit requires at least 3 points");
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (const Point& p : points) {
        x_mean += p.x;
        y_mean += p.y;
    }
    x_mean /= n;
    y_mean /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const Point& p : points) {
        const double dx = p.x - x_mean;
        const double dy = p.y - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw fit_error("degenerate abscissa: all x values equal");
    FitResult fit;
    fit.model = model;
    fit.n_points = n;
    fit.coeff_1 = sxy / sxx;
    fit.coeff_2 = y_mean - fit.coeff_1 * x_mean;
    if (syy == 0.0) {
        fit.r_squared = 1.0;
        fit.constant_fit = true;
    } else {
        double ss_res = 0.0;
        for (const Point& p : points) {
            const double r = p.y - (fit.coeff_1 * p.x + fit.coeff_2);
            ss_res += r * r;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

} // namespace detail

inline FitResult fit_linear(std::span<const Point> points) {
    FitResult fit = detail::ols(points, FitModel::linear);
    fit.derived = fit.coeff_1 * std::log(10.0); // c of the exponential form
    return fit;
}

inline FitResult fit_loglinear(std::span<const Point> points) {
    std::vector<Point> transformed;
    transformed.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].x > 0.0))
            throw domain_error("log-linear fit requires x > 0, violated at row " +
                               std::to_string(i + 1));
        transformed.push_back({std::log10(points[i].x), points[i].y});
    }
    FitResult fit = detail::ols(transformed, FitModel::log_linear);
    fit.derived = -fit.coeff_1; // d of the power form
    return fit;
}

// Key-value text block, the external representation of a fit.
inline std::string format_fit(const FitResult& fit) {
    auto num = [](double v) {
        char buffer[40];
        std::snprintf(buffer, sizeof buffer, "%.12g", v);
        return std::string(buffer);
    };
    std::string out;
    if (fit.model == FitModel::linear) {
        out += "model = linear\n";
        out += "A = " + num(fit.coeff_1) + "\n";
        out += "B = " + num(fit.coeff_2) + "\n";
        out += "c = " + num(fit.derived) + "\n";
    } else {
        out += "model = loglinear\n";
        out += "D = " + num(fit.coeff_1) + "\n";
        out += "E = " + num(fit.coeff_2) + "\n";
        out += "d = " + num(fit.derived) + "\n";
    }
    out += "r_squared = " + num(fit.r_squared) + "\n";
    out += "n_points = " + std::to_string(fit.n_points) + "\n";
    out += "constant_fit = " + std::string(fit.constant_fit ? "1" : "0") + "\n";
    return out;
}

} // namespace netstrings
