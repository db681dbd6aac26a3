#pragma once

#include <array>
#include <string>
#include <vector>

namespace lattix {

struct FitResult {
    double exponent = 0;
    double intercept = 0;
    double r_squared = 1;
    bool dropped_smallest = false;
    // (n, value, log n, log value) per kept point, ascending n.
    std::vector<std::array<double, 4>> points;
};

// Least squares of log(value) against log(n), equal weights. With the drop
// rule enabled, the smallest size is discarded once and the fit redone when
// r^2 < 0.95 (small-n transients).
FitResult fit_loglog(std::vector<std::pair<double, double>> n_value, bool drop_rule);

// CSV with the fixed header "n,value,log_n,log_value".
std::string points_csv(const FitResult& fit);

// Standalone log-log SVG: one circle marker per point plus the fitted line.
std::string loglog_svg(const FitResult& fit);

} // namespace lattix
