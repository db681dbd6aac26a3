#pragma once

#include "lattix/construct.hpp"
#include "lattix/fit.hpp"

namespace lattix {

struct SweepSpec {
    std::string kind = "general";      // "general" or "erdos"
    double alpha = 0.5;                // grid shape; ignored for erdos (always 1/2)
    std::vector<long long> sizes;      // target point counts N, strictly increasing, >= 3 of them
    std::string fit_target = "incidence"; // incidence | rich_slopes | family_size | energy
    SlopeWindow window;
    long long k = 4;
    long long pair_cap = 0;            // 0 = always use the grid-anchored concurrency measure
};

struct SweepPoint {
    long long n_target = 0;
    GridSpec grid;
    long long n_actual = 0;   // w*h; also the number of lines requested
    long long incidences = 0;
    double value = 0;         // the fitted quantity at this size
    StructureReport report;
    ConstructManifest manifest;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepPoint> points;
    FitResult fit;
};

// For each N: construct, count, analyze; then fit log(value) against log(N).
// Any stage failure is reported with the failing N.
SweepResult run_sweep(const SweepSpec& spec);

// json | csv | svg-loglog; deterministic bytes. Unknown formats are invalid.
std::string emit_report(const SweepResult& result, const std::string& format);

// Grid of ~N points shaped like [N^alpha] x [N^(1-alpha)].
GridSpec grid_for(double alpha, long long n_target);

} // namespace lattix
