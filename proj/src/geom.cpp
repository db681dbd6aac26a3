#include "lattix/geom.hpp"

#include "lattix/parallel.hpp"

#include <cmath>
#include <unordered_set>

namespace lattix {

double GridSpec::alpha() const {
    if (w < 1 || h < 1) throw std::invalid_argument("GridSpec: sides must be positive");
    const double n = static_cast<double>(w) * static_cast<double>(h);
    return std::log(static_cast<double>(w)) / std::log(n);
}

std::optional<GridSpec> ProductSet::as_grid() const {
    const auto& as = A.base();
    const auto& bs = B.base();
    if (A.shift() || B.shift() || as.empty() || bs.empty()) return std::nullopt;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (!as[i].is_rational()) return std::nullopt;
        const Rat& r = as[i].as_rat();
        if (!r.is_integer() || r.num() != static_cast<long>(i + 1)) return std::nullopt;
    }
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (!bs[i].is_rational()) return std::nullopt;
        const Rat& r = bs[i].as_rat();
        if (!r.is_integer() || r.num() != static_cast<long>(i + 1)) return std::nullopt;
    }
    return GridSpec{static_cast<long long>(as.size()), static_cast<long long>(bs.size())};
}

Steepness steepness(const GridSpec& g, const Rat& positive_slope) {
    if (positive_slope.sign() <= 0) throw std::invalid_argument("steepness: slope must be positive");
    auto [s, t] = st_of(positive_slope);
    // s/t > h/w  <=>  s*w > t*h
    return (s * to_mpz(g.w) > t * to_mpz(g.h)) ? Steepness::Steep : Steepness::NonSteep;
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Count for positive slope s/t and intercept c = p/q (canonical), all int64.
// The line hits integer x-coordinates in a single residue class mod t.
long long count_positive_int64(long long w, long long h, long long s, long long t,
                               long long p, long long q) {
    if (t % q != 0) return 0; // y is never an integer
    const long long P = p * (t / q); // intercept as P/t
    // Solve s*x == -P (mod t); gcd(s, t) = 1 so the inverse exists.
    long long x0 = 0;
    if (t == 1) {
        x0 = 1;
    } else {
        // Extended Euclid for s^{-1} mod t.
        long long r0 = s % t, r1 = t, u0 = 1, u1 = 0;
        if (r0 < 0) r0 += t;
        while (r0 != 0) {
            const long long qq = r1 / r0;
            r1 -= qq * r0; std::swap(r0, r1);
            u1 -= qq * u0; std::swap(u0, u1);
        }
        long long inv = u1 % t;
        if (inv < 0) inv += t;
        long long target = (-P) % t;
        if (target < 0) target += t;
        x0 = static_cast<long long>((static_cast<__int128>(target) * inv) % t);
        if (x0 == 0) x0 = t;
    }
    if (x0 > w) return 0;
    const long long y0 = (s * x0 + P) / t;
    const long long i_hi = std::min(floor_div(w - x0, t), floor_div(h - y0, s));
    const long long i_lo = std::max<long long>(0, -floor_div(y0 - 1, s));
    return i_hi >= i_lo ? i_hi - i_lo + 1 : 0;
}

} // namespace

long long grid_line_count(const GridSpec& g, const Line& line) {
    if (line.slope.is_vertical()) {
        if (!line.intercept.is_rational()) return 0;
        const Rat& c = line.intercept.as_rat();
        return (c.is_integer() && c.num() >= 1 && c.num() <= to_mpz(g.w)) ? g.h : 0;
    }
    const Rat& m = line.slope.value();
    if (m.is_zero()) {
        if (!line.intercept.is_rational()) return 0;
        const Rat& c = line.intercept.as_rat();
        return (c.is_integer() && c.num() >= 1 && c.num() <= to_mpz(g.h)) ? g.w : 0;
    }
    if (!line.intercept.is_rational()) return 0; // rational slope, irrational intercept
    if (m.sign() < 0) {
        // Mirror y -> h+1-y maps slope -s/t, intercept c to slope s/t,
        // intercept h+1-c with the same number of grid points.
        Line mirrored{Slope::of(-m), Number(Rat(g.h + 1) - line.intercept.as_rat())};
        return grid_line_count(g, mirrored);
    }
    const Rat& c = line.intercept.as_rat();
    auto [sz, tz] = st_of(m);
    if (sz.fits_slong_p() && tz.fits_slong_p() && c.num().fits_slong_p() && c.den().fits_slong_p()) {
        const long long s = sz.get_si(), t = tz.get_si();
        const long long p = c.num().get_si(), q = c.den().get_si();
        // Keep s*x + P and p*(t/q) inside int64.
        if (s < (1LL << 30) && t < (1LL << 30) && std::llabs(p) < (1LL << 30) && g.w < (1LL << 30) &&
            g.h < (1LL << 30))
            return count_positive_int64(g.w, g.h, s, t, p, q);
    }
    // Generic exact path with big integers.
    mpz_class s = sz, t = tz;
    mpz_class rem;
    mpz_mod(rem.get_mpz_t(), t.get_mpz_t(), c.den().get_mpz_t());
    if (rem != 0) return 0;
    mpz_class P = c.num() * (t / c.den());
    mpz_class x0;
    if (t == 1) {
        x0 = 1;
    } else {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t()) == 0)
            throw std::logic_error("grid_line_count: slope not canonical");
        mpz_class target = -P;
        mpz_mod(target.get_mpz_t(), target.get_mpz_t(), t.get_mpz_t());
        x0 = target * inv;
        mpz_mod(x0.get_mpz_t(), x0.get_mpz_t(), t.get_mpz_t());
        if (x0 == 0) x0 = t;
    }
    if (x0 > to_mpz(g.w)) return 0;
    mpz_class y0 = (s * x0 + P) / t;
    mpz_class hi1, hi2, lo;
    mpz_class wx = to_mpz(g.w) - x0;
    mpz_fdiv_q(hi1.get_mpz_t(), wx.get_mpz_t(), t.get_mpz_t());
    mpz_class hy = to_mpz(g.h) - y0;
    mpz_fdiv_q(hi2.get_mpz_t(), hy.get_mpz_t(), s.get_mpz_t());
    mpz_class i_hi = hi1 < hi2 ? hi1 : hi2;
    mpz_fdiv_q(lo.get_mpz_t(), mpz_class(y0 - 1).get_mpz_t(), s.get_mpz_t());
    mpz_class i_lo = -lo;
    if (i_lo < 0) i_lo = 0;
    if (i_hi < i_lo) return 0;
    mpz_class cnt = i_hi - i_lo + 1;
    return cnt.get_si();
}

std::vector<long long> line_counts(const ProductSet& P, const std::vector<Line>& lines) {
    std::vector<long long> counts(lines.size(), 0);
    const auto grid = P.as_grid();
    std::unordered_set<Number, NumberHash> b_members;
    std::vector<Number> a_vals;
    if (!grid) {
        a_vals = P.A.values();
        for (const auto& b : P.B.values()) b_members.insert(b);
    }
    parallel_for(lines.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Line& line = lines[i];
            if (grid) {
                counts[i] = grid_line_count(*grid, line);
                continue;
            }
            if (line.slope.is_vertical()) {
                counts[i] = P.A.contains(line.intercept) ? static_cast<long long>(P.B.size()) : 0;
                continue;
            }
            long long c = 0;
            for (const auto& a : a_vals)
                if (b_members.count(line.y_at(a))) ++c;
            counts[i] = c;
        }
    });
    return counts;
}

long long incidences_fast(const ProductSet& P, const std::vector<Line>& lines) {
    long long total = 0;
    for (long long c : line_counts(P, lines)) total += c;
    return total;
}

long long incidences_oracle(const ProductSet& P, const std::vector<Line>& lines, long long cap) {
    const long long work = P.point_count() * static_cast<long long>(lines.size());
    if (work > cap) throw resource_limit_error("incidences_oracle: |P|*|L| exceeds cap");
    const auto as = P.A.values();
    const auto bs = P.B.values();
    long long total = 0;
    for (const auto& line : lines)
        for (const auto& a : as)
            for (const auto& b : bs)
                if (line.contains(a, b)) ++total;
    return total;
}

namespace {

// Position of count relative to (N^(1/3)/k, k*N^(1/3)], decided with integer
// cubes: -1 below (underfull), 0 inside (proper), +1 above (overfull).
int properness(long long count, long long n_points, long long k) {
    if (count <= 0) return -1;
    const auto cube = [](unsigned __int128 v) { return v * v * v; };
    if (cube(static_cast<unsigned __int128>(count) * k) <= static_cast<unsigned __int128>(n_points))
        return -1; // count <= N^(1/3)/k
    if (cube(static_cast<unsigned __int128>(count)) >
        cube(static_cast<unsigned __int128>(k)) * static_cast<unsigned __int128>(n_points))
        return 1; // count > k*N^(1/3)
    return 0;
}

} // namespace

ProperPartition classify_proper(long long n_points, const std::vector<long long>& counts,
                                const AnalyzerConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("classify_proper: k must be positive");
    ProperPartition part;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        switch (properness(counts[i], n_points, cfg.k)) {
            case 0: part.proper.push_back(i); break;
            case -1: part.underfull.push_back(i); break;
            default: part.overfull.push_back(i); break;
        }
    }
    return part;
}

ProperPartition classify_proper(const ProductSet& P, const std::vector<Line>& lines,
                                const AnalyzerConfig& cfg) {
    return classify_proper(P.point_count(), line_counts(P, lines), cfg);
}

} // namespace lattix
