#pragma once

#include "lattix/structure.hpp"

#include <string>
#include <vector>

namespace lattix {

// Generalized arithmetic progression {a + sum k_j b_j : 0 <= k_j <= n_j - 1}.
struct GapSpec {
    Number a;
    std::vector<Number> steps;   // b_1..b_d
    std::vector<long> lengths;   // n_1..n_d
};

struct GapSetResult {
    NumberSet set;
    bool proper = true; // |set| == product of lengths (no collisions)
};

GapSetResult gap_set(const GapSpec& spec);

struct SlopeRecord {
    long long s = 0, t = 0;
    int sign = 1;
    long long lines = 0;      // selected lines with this signed slope
    long long count_min = 0;  // incidence counts among the selected lines
    long long count_max = 0;
};

// Deterministic record of how a configuration was generated; enough to
// reproduce the exact line list byte for byte.
struct ConstructManifest {
    std::string kind;
    GridSpec grid;
    Rat kt = Rat(2), ks = Rat(2);
    long long k = 4;
    long long n_lines_requested = 0;
    long long total_candidates = 0;
    long long threshold_count = 0;       // smallest selected incidence count
    long long taken_at_threshold = 0;    // ties admitted at the threshold
    long long total_incidences = 0;
    std::string tie_break = "count desc, then (t, s, sign[+ first], intercept) asc";
    std::vector<SlopeRecord> slopes;     // per signed slope, (t, s, sign) order
};

struct Configuration {
    ProductSet points;
    std::vector<Line> lines;
    ConstructManifest manifest;
};

// Elekes: P = [r] x [2r^2], lines y = a*x + b with a in [r], b in [r^2].
// Every line meets exactly r points; |L| = r^3, incidences = r^4.
Configuration construct_elekes(long long r);

// Window-set generator: for every slope of the window set (both signs), all
// lines anchored on the t leftmost columns and s bottom rows (the s*t
// double-counted lines removed), ranked by exact incidence count with the
// manifest's tie-break, top n_lines returned.
Configuration construct_general_alpha(const GridSpec& g, const SlopeWindow& win, long long k,
                                      long long n_lines);

// Erdos square-grid case: construct_general_alpha on [m] x [m].
Configuration construct_erdos(long long m, long long n_lines, const SlopeWindow& win = SlopeWindow{},
                              long long k = 4);

// One line per slope through the center; duplicate slopes are invalid.
std::vector<Line> construct_pencil(const Number& center_x, const Number& center_y,
                                   const std::vector<Slope>& slopes);

} // namespace lattix
