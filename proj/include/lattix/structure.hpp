#pragma once

#include "lattix/energy.hpp"
#include "lattix/geom.hpp"

#include <string>
#include <vector>

namespace lattix {

// Window constants realizing t = Theta(N^(alpha-1/3)) and s = Theta(N^(2/3-alpha)).
struct SlopeWindow {
    Rat kt = Rat(2);
    Rat ks = Rat(2);
};

struct ParallelFamily {
    Slope slope = Slope::of(Rat(0));
    std::vector<std::size_t> line_idx;   // indices into the analyzed line list
    std::vector<long long> sizes;        // per-line incidence counts
    NumberSet intercepts;
};

// Partition of the lines by exact slope, ordered by family size descending
// (ties by slope order).
std::vector<ParallelFamily> group_parallel(const std::vector<Line>& lines,
                                           const std::vector<long long>& counts);

struct ConcurrentFamily {
    Number center_x;
    Number center_y;
    std::vector<std::size_t> line_idx;
};

// All maximal pencils of size >= min_size among pairwise intersection points,
// made disjoint greedily (largest first). Every reported family is verified
// by substituting the center into each member line. O(|L|^2); refuses inputs
// above pair_cap.
std::vector<ConcurrentFamily> find_concurrent(const std::vector<Line>& lines, std::size_t min_size,
                                              long long pair_cap = 20'000);

// Positive half of the window slope set for the grid (negative slopes are
// the mirror image): non-steep window over t with s <= t*h/w, steep window
// over s with t < s*w/h, coprime pairs only. Requires alpha in (1/3, 1/2];
// the alpha = 1/2 boundary degenerates gracefully.
std::vector<Rat> window_slope_set(const GridSpec& g, const SlopeWindow& win);

// The y-intercept pattern set {j - i*(s/t)} for one positive
// slope, deduplicated. Degenerate ranges contribute nothing.
NumberSet intercept_pattern_set(const GridSpec& g, const Rat& positive_slope, long long k);

struct FamilyStats {
    std::string slope;
    long long size = 0;
    long long pattern_size = 0;     // |intercept_pattern_set| for this slope, 0 if n/a
    double intercept_coverage = 0;  // size / pattern_size
    bool intercepts_in_pattern = true;
    long long intercept_add_energy = 0;
};

struct StructureReport {
    long long n_points = 0;
    long long n_lines = 0;
    long long n_proper = 0;
    long long rich_slopes = 0;
    long long rich_threshold = 0; // minimal family size that counts as rich
    long long max_parallel = 0;
    long long median_parallel = 0;
    long long max_concurrent = 0;
    std::string concurrency_method; // "pairwise" or "grid-anchored"
    double beta_hat = 0;
    double gamma_hat = 0;
    bool window_defined = false;    // alpha in (1/3, 1/2], so the slope/intercept patterns apply
    double slope_set_match = 0;     // fraction of proper families with |slope| in the window set
    double intercept_coverage = 0;  // mean per-family coverage
    bool intercepts_subset = true;  // every proper family's intercepts inside its pattern set
    long long slope_mult_energy = 0;
    std::vector<long long> intercept_add_energy_histogram;
    std::vector<FamilyStats> families;
};

// Full structure verifier over a lattice configuration: properness, parallel
// families, rich slopes, slope/intercept pattern matching, concurrency, and
// the energy profile.
StructureReport verify_lattice_structure(const GridSpec& g, const std::vector<Line>& lines,
                                         const AnalyzerConfig& cfg, const SlopeWindow& win);

struct ConcurrencyCheck {
    long long lhs = 0; // E^x(A', B') after translating the center to the origin
    long long rhs = 0; // sum over lines of m_l^2
    bool pass = true;
    std::vector<long long> line_points; // m_l per non-axis-parallel line
};

// The quadruple-injection inequality for pencils over product sets: for a pencil
// through `center`, E^x(A', B') >= sum m_l^2 exactly.
ConcurrencyCheck concurrency_energy_check(const ProductSet& P, const Number& center_x,
                                          const Number& center_y, const std::vector<Line>& pencil);

// E^x of the family slopes and E^+ of each family's intercepts.
std::pair<long long, std::vector<long long>> family_energy_profile(
    const std::vector<ParallelFamily>& families);

} // namespace lattix
