#include "lattix/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lattix {

namespace {

FitResult fit_once(const std::vector<std::pair<double, double>>& nv) {
    FitResult fit;
    const std::size_t n = nv.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [nn, vv] : nv) {
        const double x = std::log(nn), y = std::log(vv);
        fit.points.push_back({nn, vv, x, y});
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    fit.exponent = denom != 0 ? (n * sxy - sx * sy) / denom : 0.0;
    fit.intercept = (sy - fit.exponent * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (const auto& p : fit.points) {
        const double pred = fit.intercept + fit.exponent * p[2];
        ss_res += (p[3] - pred) * (p[3] - pred);
        ss_tot += (p[3] - mean_y) * (p[3] - mean_y);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

FitResult fit_loglog(std::vector<std::pair<double, double>> n_value, bool drop_rule) {
    if (n_value.size() < 2) throw std::invalid_argument("fit_loglog: need at least two points");
    for (const auto& [n, v] : n_value)
        if (n <= 0 || v <= 0) throw std::invalid_argument("fit_loglog: points must be positive");
    std::sort(n_value.begin(), n_value.end());
    FitResult fit = fit_once(n_value);
    if (drop_rule && fit.r_squared < 0.95 && n_value.size() >= 3) {
        n_value.erase(n_value.begin());
        fit = fit_once(n_value);
        fit.dropped_smallest = true;
    }
    return fit;
}

std::string points_csv(const FitResult& fit) {
    std::string out = "n,value,log_n,log_value\n";
    for (const auto& p : fit.points)
        out += fmt(p[0]) + "," + fmt(p[1]) + "," + fmt(p[2]) + "," + fmt(p[3]) + "\n";
    return out;
}

std::string loglog_svg(const FitResult& fit) {
    const double width = 480, height = 360, margin = 48;
    double xmin = fit.points.front()[2], xmax = xmin, ymin = fit.points.front()[3], ymax = ymin;
    for (const auto& p : fit.points) {
        xmin = std::min(xmin, p[2]); xmax = std::max(xmax, p[2]);
        ymin = std::min(ymin, p[3]); ymax = std::max(ymax, p[3]);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    const auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
                      "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
                      fmt(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(height - margin) + "\" x2=\"" +
           fmt(width - margin) + "\" y2=\"" + fmt(height - margin) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(margin) + "\" x2=\"" + fmt(margin) +
           "\" y2=\"" + fmt(height - margin) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(px(xmin)) + "\" y1=\"" + fmt(py(fit.intercept + fit.exponent * xmin)) +
           "\" x2=\"" + fmt(px(xmax)) + "\" y2=\"" + fmt(py(fit.intercept + fit.exponent * xmax)) +
           "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    for (const auto& p : fit.points)
        svg += "<circle cx=\"" + fmt(px(p[2])) + "\" cy=\"" + fmt(py(p[3])) +
               "\" r=\"4\" fill=\"firebrick\"/>\n";
    svg += "<text x=\"" + fmt(width / 2) + "\" y=\"" + fmt(margin / 2) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">log-log fit: exponent " +
           fmt(fit.exponent) + ", r^2 " + fmt(fit.r_squared) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace lattix
