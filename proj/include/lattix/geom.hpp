#pragma once

#include "lattix/errors.hpp"
#include "lattix/numberset.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lattix {

// Integer grid [w] x [h]; coordinates start at 1. With N = w*h this models
// the lattice [N^alpha] x [N^(1-alpha)], alpha = log w / log N.
struct GridSpec {
    long long w = 1;
    long long h = 1;

    long long point_count() const { return w * h; }
    double alpha() const;
    bool contains(long long x, long long y) const { return x >= 1 && x <= w && y >= 1 && y <= h; }
};

// Cartesian product A x B of exact coordinate sets.
struct ProductSet {
    NumberSet A; // x-coordinates
    NumberSet B; // y-coordinates

    long long point_count() const { return static_cast<long long>(A.size()) * static_cast<long long>(B.size()); }
    static ProductSet grid(const GridSpec& g) {
        return ProductSet{NumberSet::interval(g.w), NumberSet::interval(g.h)};
    }
    // Recognizes A = [w], B = [h] exactly.
    std::optional<GridSpec> as_grid() const;
};

// Line slope: a canonical rational or vertical.
class Slope {
public:
    static Slope of(Rat m) { return Slope(false, std::move(m)); }
    static Slope vertical() { return Slope(true, Rat(0)); }

    bool is_vertical() const { return vertical_; }
    const Rat& value() const {
        if (vertical_) throw std::invalid_argument("Slope: vertical slope has no finite value");
        return m_;
    }
    // Canonical (s, t) of |value| for a nonzero non-vertical slope.
    std::pair<mpz_class, mpz_class> st() const { return st_of(m_.abs()); }
    int sign() const { return vertical_ ? 0 : m_.sign(); }

    bool operator==(const Slope& o) const {
        return vertical_ == o.vertical_ && (vertical_ || m_ == o.m_);
    }
    bool operator<(const Slope& o) const {
        if (vertical_ != o.vertical_) return !vertical_; // finite slopes first
        return !vertical_ && m_ < o.m_;
    }
    std::size_t hash() const { return vertical_ ? 0x9d2c5680ULL : m_.hash(); }
    std::string to_string() const { return vertical_ ? "vertical" : m_.to_string(); }

private:
    Slope(bool v, Rat m) : vertical_(v), m_(std::move(m)) {}
    bool vertical_;
    Rat m_;
};

// y = slope*x + intercept, or x = intercept for vertical lines. Canonical:
// two lines are equal iff slope and intercept are equal.
struct Line {
    Slope slope = Slope::of(Rat(0));
    Number intercept;

    Number y_at(const Number& x) const {
        if (slope.is_vertical()) throw std::invalid_argument("Line: vertical line has no y(x)");
        return Number(slope.value()) * x + intercept;
    }
    bool contains(const Number& x, const Number& y) const {
        if (slope.is_vertical()) return x == intercept;
        return y == y_at(x);
    }

    bool operator==(const Line& o) const { return slope == o.slope && intercept == o.intercept; }
    bool operator<(const Line& o) const {
        if (!(slope == o.slope)) return slope < o.slope;
        return intercept < o.intercept;
    }
    std::size_t hash() const { return slope.hash() * 1000003ULL ^ intercept.hash(); }
};

struct LineHash {
    std::size_t operator()(const Line& l) const { return l.hash(); }
};

struct AnalyzerConfig {
    long long k = 4;                      // properness constant
    long long oracle_cap = 20'000'000;    // max |P|*|L| for brute force
    long long pair_cap = 20'000;          // max |L| for pairwise concurrency search
    std::optional<double> rich_c;         // rich threshold as c * N^(2/3); default max/8
};

enum class Steepness { NonSteep, Steep };

// Steep iff s/t > h/w, exactly; the boundary is non-steep.
Steepness steepness(const GridSpec& g, const Rat& positive_slope);

// Exact number of grid points on a line, by arithmetic on the residue class
// of x (no enumeration). Irrational intercepts with rational slopes never
// meet the grid and count 0.
long long grid_line_count(const GridSpec& g, const Line& line);

// Per-line exact incidence counts against a product set; hash membership in
// B, with a closed-form path for integer grids.
std::vector<long long> line_counts(const ProductSet& P, const std::vector<Line>& lines);

long long incidences_fast(const ProductSet& P, const std::vector<Line>& lines);

// Direct substitution of every point into every line.
long long incidences_oracle(const ProductSet& P, const std::vector<Line>& lines, long long cap);

struct ProperPartition {
    std::vector<std::size_t> proper;
    std::vector<std::size_t> underfull;
    std::vector<std::size_t> overfull;
};

// Line index partition by point count: proper iff count in
// (N^(1/3)/k, k*N^(1/3)], with N the number of points.
ProperPartition classify_proper(long long n_points, const std::vector<long long>& counts,
                                const AnalyzerConfig& cfg);
ProperPartition classify_proper(const ProductSet& P, const std::vector<Line>& lines,
                                const AnalyzerConfig& cfg);

} // namespace lattix
