#include "lattix/structure.hpp"

#include <algorithm>
#include <cmath>
#include "lattix/numtheory.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace lattix {

namespace {

struct SlopeHash {
    std::size_t operator()(const Slope& s) const { return s.hash(); }
};
struct RatHash {
    std::size_t operator()(const Rat& r) const { return r.hash(); }
};

mpz_class cube(const mpz_class& v) { return v * v * v; }

// Smallest integer c >= 0 with c^3 * rhs_scale >= target (monotone search
// around a floating guess, decided exactly).
long long ceil_by_cube(const mpz_class& target, const mpz_class& rhs_scale, double guess) {
    mpz_class c(static_cast<long>(std::llround(std::max(0.0, guess))));
    while (cube(c) * rhs_scale < target) ++c;
    while (c > 0 && cube(c - 1) * rhs_scale >= target) --c;
    return c.get_si();
}

// Largest integer c >= 0 with c^3 * lhs_scale <= target; -1 if none.
long long floor_by_cube(const mpz_class& target, const mpz_class& lhs_scale, double guess) {
    mpz_class c(static_cast<long>(std::llround(std::max(0.0, guess))));
    while (c > 0 && cube(c) * lhs_scale > target) --c;
    while (cube(c + 1) * lhs_scale <= target) ++c;
    if (cube(c) * lhs_scale > target) return -1;
    return c.get_si();
}

// ceil(v * N^(1/3) / k) for integers v, k >= 1: smallest c with c^3 k^3 >= v^3 N.
long long ceil_scaled_cbrt(long long v, const mpz_class& n_points, long long k) {
    const mpz_class target = cube(to_mpz(v)) * n_points;
    const double guess =
        static_cast<double>(v) * std::cbrt(n_points.get_d()) / static_cast<double>(k) + 1.0;
    return ceil_by_cube(target, cube(to_mpz(k)), guess);
}

} // namespace

std::vector<ParallelFamily> group_parallel(const std::vector<Line>& lines,
                                           const std::vector<long long>& counts) {
    if (!counts.empty() && counts.size() != lines.size())
        throw std::invalid_argument("group_parallel: counts/lines size mismatch");
    std::unordered_map<Slope, std::size_t, SlopeHash> index;
    std::vector<ParallelFamily> families;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto [it, inserted] = index.try_emplace(lines[i].slope, families.size());
        if (inserted) {
            families.push_back(ParallelFamily{lines[i].slope, {}, {}, {}});
        }
        ParallelFamily& fam = families[it->second];
        fam.line_idx.push_back(i);
        fam.sizes.push_back(counts.empty() ? 0 : counts[i]);
    }
    for (auto& fam : families) {
        std::vector<Number> ic;
        ic.reserve(fam.line_idx.size());
        for (std::size_t i : fam.line_idx) ic.push_back(lines[i].intercept);
        fam.intercepts = NumberSet::of(std::move(ic));
    }
    std::sort(families.begin(), families.end(), [](const ParallelFamily& a, const ParallelFamily& b) {
        if (a.line_idx.size() != b.line_idx.size()) return a.line_idx.size() > b.line_idx.size();
        return a.slope < b.slope;
    });
    return families;
}

namespace {

struct PointKey {
    Number x, y;
    bool operator==(const PointKey& o) const { return x == o.x && y == o.y; }
};
struct PointKeyHash {
    std::size_t operator()(const PointKey& p) const { return p.x.hash() * 805306457ULL ^ p.y.hash(); }
};

std::optional<PointKey> line_intersection(const Line& a, const Line& b) {
    if (a.slope.is_vertical() && b.slope.is_vertical()) return std::nullopt;
    if (a.slope.is_vertical()) {
        const Number x = a.intercept;
        return PointKey{x, b.y_at(x)};
    }
    if (b.slope.is_vertical()) {
        const Number x = b.intercept;
        return PointKey{x, a.y_at(x)};
    }
    if (a.slope == b.slope) return std::nullopt;
    const Number dm{a.slope.value() - b.slope.value()};
    const Number x = (b.intercept - a.intercept) / dm;
    return PointKey{x, a.y_at(x)};
}

} // namespace

std::vector<ConcurrentFamily> find_concurrent(const std::vector<Line>& lines, std::size_t min_size,
                                              long long pair_cap) {
    if (static_cast<long long>(lines.size()) > pair_cap)
        throw resource_limit_error("find_concurrent: |L| exceeds the pairwise cap");
    if (min_size < 2) min_size = 2;

    // Work on distinct lines; duplicates map to their first occurrence.
    std::vector<std::size_t> uniq;
    {
        std::unordered_set<Line, LineHash> seen;
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (seen.insert(lines[i]).second) uniq.push_back(i);
    }

    std::unordered_map<PointKey, long long, PointKeyHash> pair_counts;
    for (std::size_t a = 0; a < uniq.size(); ++a) {
        for (std::size_t b = a + 1; b < uniq.size(); ++b) {
            auto p = line_intersection(lines[uniq[a]], lines[uniq[b]]);
            if (p) ++pair_counts[*p];
        }
    }

    const long long need_pairs =
        static_cast<long long>(min_size) * static_cast<long long>(min_size - 1) / 2;
    std::vector<PointKey> candidates;
    for (const auto& [pt, c] : pair_counts)
        if (c >= need_pairs) candidates.push_back(pt);
    std::sort(candidates.begin(), candidates.end(), [](const PointKey& p, const PointKey& q) {
        const int cx = p.x.cmp(q.x);
        return cx != 0 ? cx < 0 : p.y.cmp(q.y) < 0;
    });

    // Membership verified by substitution, then greedy disjointification.
    struct Cand {
        PointKey pt;
        std::vector<std::size_t> members;
    };
    std::vector<Cand> cands;
    for (const auto& pt : candidates) {
        Cand c{pt, {}};
        for (std::size_t i : uniq)
            if (lines[i].contains(pt.x, pt.y)) c.members.push_back(i);
        if (c.members.size() >= min_size) cands.push_back(std::move(c));
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.members.size() > b.members.size(); });

    std::unordered_set<std::size_t> used;
    std::vector<ConcurrentFamily> out;
    for (const auto& c : cands) {
        std::vector<std::size_t> avail;
        for (std::size_t i : c.members)
            if (!used.count(i)) avail.push_back(i);
        if (avail.size() < min_size) continue;
        for (std::size_t i : avail) used.insert(i);
        out.push_back(ConcurrentFamily{c.pt.x, c.pt.y, std::move(avail)});
    }
    return out;
}

std::vector<Rat> window_slope_set(const GridSpec& g, const SlopeWindow& win) {
    const long long w = g.w, h = g.h;
    if (w < 1 || h < 1) throw std::invalid_argument("window_slope_set: bad grid");
    // alpha in (1/3, 1/2]  <=>  w <= h < w^2 (alpha = log w / log wh).
    if (!(w <= h && to_mpz(w) * to_mpz(w) > to_mpz(h)))
        throw std::invalid_argument("window_slope_set: alpha must lie in (1/3, 1/2]");
    if (win.kt < Rat(1) || win.ks < Rat(1))
        throw std::invalid_argument("window_slope_set: window constants must be >= 1");

    const mpz_class N = to_mpz(w) * to_mpz(h);
    const double n_d = N.get_d();

    std::vector<Rat> out;

    // Non-steep: N^(alpha-1/3)/kt <= t <= kt*N^(alpha-1/3) with N^(alpha-1/3) = w/N^(1/3),
    // and 1 <= s <= t*h/w.
    {
        const mpz_class a = win.kt.num(), b = win.kt.den();
        const double center = static_cast<double>(w) / std::cbrt(n_d);
        const long long t_lo =
            ceil_by_cube(cube(to_mpz(w)) * cube(b), cube(a) * N, center / win.kt.approx());
        const long long t_hi =
            floor_by_cube(cube(a) * cube(to_mpz(w)), cube(b) * N, center * win.kt.approx());
        if (t_hi >= std::max<long long>(t_lo, 1)) {
            for (auto [s, t] : coprime_pairs(std::max<long long>(t_lo, 1), t_hi,
                                             [&](long long t) { return Rat(t * h, w); }))
                out.emplace_back(s, t);
        }
    }

    // Steep: N^(2/3-alpha)/ks <= s <= ks*N^(2/3-alpha) with N^(2/3-alpha) = N^(2/3)/w,
    // and 1 <= t < s*w/h (roles swapped in the enumeration).
    {
        const mpz_class a = win.ks.num(), b = win.ks.den();
        const mpz_class N2 = N * N;
        const double center = std::cbrt(n_d) * std::cbrt(n_d) / static_cast<double>(w);
        const long long s_lo =
            ceil_by_cube(N2 * cube(b), cube(a) * cube(to_mpz(w)), center / win.ks.approx());
        const long long s_hi =
            floor_by_cube(cube(a) * N2, cube(b) * cube(to_mpz(w)), center * win.ks.approx());
        if (s_hi >= std::max<long long>(s_lo, 1)) {
            // t < s*w/h  <=>  t <= floor((s*w - 1)/h)
            for (auto [t, s] : coprime_pairs(std::max<long long>(s_lo, 1), s_hi,
                                             [&](long long s) { return Rat(s * w - 1, h); }))
                out.emplace_back(s, t);
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

NumberSet intercept_pattern_set(const GridSpec& g, const Rat& positive_slope, long long k) {
    if (k < 1) throw std::invalid_argument("intercept_pattern_set: k must be positive");
    auto [sz, tz] = st_of(positive_slope);
    if (!sz.fits_slong_p() || !tz.fits_slong_p())
        throw std::invalid_argument("intercept_pattern_set: slope too large");
    const long long s = sz.get_si(), t = tz.get_si();
    const mpz_class N = to_mpz(g.w) * to_mpz(g.h);

    const long long j_hi = g.h - ceil_scaled_cbrt(s, N, k); // floor(h - s*N^(1/3)/k)
    const long long i_hi = g.w - ceil_scaled_cbrt(t, N, k); // floor(w - t*N^(1/3)/k)

    std::vector<Number> vals;
    if (j_hi >= 1) {
        vals.reserve(static_cast<std::size_t>(t) * static_cast<std::size_t>(j_hi));
        for (long long i = 1; i <= t; ++i)
            for (long long j = 1; j <= j_hi; ++j) vals.emplace_back(Rat(j * t - i * s, t));
    }
    if (i_hi >= 1) {
        for (long long i = 1; i <= i_hi; ++i)
            for (long long j = 1; j <= s; ++j) vals.emplace_back(Rat(j * t - i * s, t));
    }
    return NumberSet::of(std::move(vals));
}

namespace {

// E^+ with a flat pair-sum table when the set is small-denominator rational
// and the value range is modest; exact hashed fallback otherwise.
long long add_energy_flat(const NumberSet& S) {
    const auto& vals = S.base();
    if (S.shift() || vals.empty()) return add_energy(S);
    mpz_class den_lcm = 1;
    for (const auto& v : vals) {
        if (!v.is_rational()) return add_energy(S);
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.as_rat().den().get_mpz_t());
        if (den_lcm > 1'000'000) return add_energy(S);
    }
    std::vector<long long> scaled;
    scaled.reserve(vals.size());
    for (const auto& v : vals) {
        const Rat& r = v.as_rat();
        mpz_class z = r.num() * (den_lcm / r.den());
        if (!z.fits_slong_p()) return add_energy(S);
        scaled.push_back(z.get_si());
        if (std::llabs(scaled.back()) > (1LL << 40)) return add_energy(S);
    }
    auto [mn, mx] = std::minmax_element(scaled.begin(), scaled.end());
    const long long range = *mx - *mn;
    if (range > (1LL << 22)) return add_energy(S);

    std::vector<std::int32_t> sums(static_cast<std::size_t>(2 * range + 1), 0);
    const long long base = 2 * *mn;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        for (std::size_t j = i + 1; j < scaled.size(); ++j)
            sums[scaled[i] + scaled[j] - base] += 2;
        sums[2 * scaled[i] - base] += 1;
    }
    long long energy = 0;
    for (long long c : sums) energy += c * c;
    return energy;
}

} // namespace

std::pair<long long, std::vector<long long>> family_energy_profile(
    const std::vector<ParallelFamily>& families) {
    std::vector<Number> slope_vals;
    for (const auto& f : families)
        if (!f.slope.is_vertical()) slope_vals.emplace_back(f.slope.value());
    const long long slope_energy = mult_energy(NumberSet::of(std::move(slope_vals)));
    std::vector<long long> intercept_energies;
    intercept_energies.reserve(families.size());
    for (const auto& f : families) intercept_energies.push_back(add_energy_flat(f.intercepts));
    return {slope_energy, intercept_energies};
}

ConcurrencyCheck concurrency_energy_check(const ProductSet& P, const Number& center_x,
                                          const Number& center_y, const std::vector<Line>& pencil) {
    for (const auto& line : pencil)
        if (!line.contains(center_x, center_y))
            throw std::invalid_argument("concurrency_energy_check: line misses the center");

    // Translate the center to the origin and drop zeros.
    std::vector<Number> a_shift, b_shift;
    for (const auto& a : P.A.values()) {
        Number v = a - center_x;
        if (!v.is_zero()) a_shift.push_back(std::move(v));
    }
    for (const auto& b : P.B.values()) {
        Number v = b - center_y;
        if (!v.is_zero()) b_shift.push_back(std::move(v));
    }
    const NumberSet A = NumberSet::of(std::move(a_shift));
    const NumberSet B = NumberSet::of(std::move(b_shift));

    ConcurrencyCheck out;
    out.lhs = mult_energy_bipartite(A, B);

    std::unordered_set<Number, NumberHash> b_members;
    for (const auto& b : B.values()) b_members.insert(b);
    for (const auto& line : pencil) {
        if (line.slope.is_vertical() || line.slope.value().is_zero()) continue; // axis-parallel removed
        const Number m{line.slope.value()};
        long long cnt = 0;
        for (const auto& a : A.values())
            if (b_members.count(m * a)) ++cnt;
        out.line_points.push_back(cnt);
        out.rhs += cnt * cnt;
    }
    out.pass = out.lhs >= out.rhs;
    return out;
}

namespace {

// First grid point and step of a line on an integer grid, when representable
// in 64-bit; the step is (dx, dy) with dx >= 0.
struct GridTrace {
    long long x0, y0, dx, dy, count;
};

std::optional<GridTrace> grid_line_trace(const GridSpec& g, const Line& line) {
    const long long cnt = grid_line_count(g, line);
    if (cnt == 0) return std::nullopt;
    if (line.slope.is_vertical()) {
        return GridTrace{line.intercept.as_rat().num().get_si(), 1, 0, 1, cnt};
    }
    const Rat& m = line.slope.value();
    if (m.is_zero()) return GridTrace{1, line.intercept.as_rat().num().get_si(), 1, 0, cnt};
    const bool neg = m.sign() < 0;
    const Line work = neg ? Line{Slope::of(-m), Number(Rat(g.h + 1) - line.intercept.as_rat())} : line;
    auto [sz, tz] = st_of(work.slope.value());
    if (!sz.fits_slong_p() || !tz.fits_slong_p()) return std::nullopt;
    const long long s = sz.get_si(), t = tz.get_si();
    // Walk to the first in-range point: x in one residue class mod t.
    const Rat& c = work.intercept.as_rat();
    if (to_mpz(t) % c.den() != 0) return std::nullopt;
    mpz_class P = c.num() * (to_mpz(t) / c.den());
    mpz_class x0z;
    if (t == 1) {
        x0z = 1;
    } else {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), to_mpz(s).get_mpz_t(), to_mpz(t).get_mpz_t());
        mpz_class target = -P;
        { mpz_class tt = to_mpz(t); mpz_mod(target.get_mpz_t(), target.get_mpz_t(), tt.get_mpz_t()); }
        x0z = target * inv;
        { mpz_class tt = to_mpz(t); mpz_mod(x0z.get_mpz_t(), x0z.get_mpz_t(), tt.get_mpz_t()); }
        if (x0z == 0) x0z = to_mpz(t);
    }
    long long x0 = x0z.get_si();
    mpz_class y0z = (to_mpz(s) * to_mpz(x0) + P) / to_mpz(t);
    if (!y0z.fits_slong_p()) return std::nullopt;
    long long y0 = y0z.get_si();
    while (y0 < 1) { // step forward until in vertical range
        x0 += t;
        y0 += s;
    }
    if (neg) return GridTrace{x0, g.h + 1 - y0, t, -s, cnt};
    return GridTrace{x0, y0, t, s, cnt};
}

} // namespace

StructureReport verify_lattice_structure(const GridSpec& g, const std::vector<Line>& lines,
                                         const AnalyzerConfig& cfg, const SlopeWindow& win) {
    StructureReport rep;
    const ProductSet P = ProductSet::grid(g);
    const long long N = g.point_count();
    rep.n_points = N;
    rep.n_lines = static_cast<long long>(lines.size());

    const std::vector<long long> counts = line_counts(P, lines);
    const ProperPartition part = classify_proper(N, counts, cfg);
    rep.n_proper = static_cast<long long>(part.proper.size());

    std::vector<Line> plines;
    std::vector<long long> pcounts;
    plines.reserve(part.proper.size());
    for (std::size_t i : part.proper) {
        plines.push_back(lines[i]);
        pcounts.push_back(counts[i]);
    }

    const auto families = group_parallel(plines, pcounts);
    rep.max_parallel = families.empty() ? 0 : static_cast<long long>(families.front().line_idx.size());
    if (!families.empty()) rep.median_parallel = static_cast<long long>(families[families.size() / 2].line_idx.size());
    rep.beta_hat = (rep.max_parallel >= 1 && N > 1)
                       ? std::log(static_cast<double>(rep.max_parallel)) / std::log(static_cast<double>(N))
                       : 0.0;

    // Rich slopes: size >= rich_c * N^(2/3) when configured, else >= max/8.
    if (cfg.rich_c) {
        mpq_class c_exact;
        mpq_set_d(c_exact.get_mpq_t(), *cfg.rich_c);
        const mpz_class target = cube(mpz_class(c_exact.get_num())) * to_mpz(N) * to_mpz(N);
        const mpz_class scale = cube(mpz_class(c_exact.get_den()));
        const double guess = *cfg.rich_c * std::cbrt(static_cast<double>(N) * N);
        rep.rich_threshold = std::max<long long>(1, ceil_by_cube(target, scale, guess));
    } else {
        rep.rich_threshold = std::max<long long>(1, (rep.max_parallel + 7) / 8);
    }
    for (const auto& f : families)
        if (static_cast<long long>(f.line_idx.size()) >= rep.rich_threshold) ++rep.rich_slopes;

    // Slope/intercept pattern matching (defined for alpha in (1/3, 1/2]).
    std::unordered_set<Rat, RatHash> window_slopes;
    try {
        for (const auto& r : window_slope_set(g, win)) window_slopes.insert(r);
        rep.window_defined = true;
    } catch (const std::invalid_argument&) {
        rep.window_defined = false;
    }

    std::unordered_map<Rat, std::pair<long long, std::unordered_set<Number, NumberHash>>, RatHash>
        pattern_cache;
    std::size_t matched = 0;
    double coverage_sum = 0.0;
    for (const auto& f : families) {
        FamilyStats fs;
        fs.slope = f.slope.to_string();
        fs.size = static_cast<long long>(f.line_idx.size());
        fs.intercept_add_energy = add_energy_flat(f.intercepts);
        rep.intercept_add_energy_histogram.push_back(fs.intercept_add_energy);

        const bool sloped = !f.slope.is_vertical() && !f.slope.value().is_zero();
        if (rep.window_defined && sloped) {
            const Rat am = f.slope.value().abs();
            if (window_slopes.count(am)) ++matched;
            auto it = pattern_cache.find(am);
            if (it == pattern_cache.end()) {
                const NumberSet pat = intercept_pattern_set(g, am, cfg.k);
                std::unordered_set<Number, NumberHash> memb;
                for (const auto& v : pat.base()) memb.insert(v);
                it = pattern_cache.emplace(am, std::make_pair(static_cast<long long>(pat.size()),
                                                              std::move(memb)))
                         .first;
            }
            fs.pattern_size = it->second.first;
            const bool negative = f.slope.value().sign() < 0;
            bool all_in = fs.pattern_size > 0;
            for (const auto& c : f.intercepts.base()) {
                // Negative-slope families mirror onto positive ones via y -> h+1-y.
                const Number probe = negative ? Number(Rat(g.h + 1)) - c : c;
                if (!it->second.second.count(probe)) {
                    all_in = false;
                    break;
                }
            }
            fs.intercepts_in_pattern = all_in;
            fs.intercept_coverage =
                fs.pattern_size > 0 ? static_cast<double>(fs.size) / static_cast<double>(fs.pattern_size)
                                    : 0.0;
        } else {
            fs.pattern_size = 0;
            fs.intercepts_in_pattern = false;
            fs.intercept_coverage = 0.0;
        }
        rep.intercepts_subset = rep.intercepts_subset && fs.intercepts_in_pattern;
        coverage_sum += fs.intercept_coverage;
        rep.families.push_back(std::move(fs));
    }
    rep.slope_set_match =
        families.empty() ? 0.0 : static_cast<double>(matched) / static_cast<double>(families.size());
    rep.intercept_coverage = families.empty() ? 0.0 : coverage_sum / static_cast<double>(families.size());
    if (families.empty()) rep.intercepts_subset = true;

    {
        std::vector<Number> slope_vals;
        for (const auto& f : families)
            if (!f.slope.is_vertical()) slope_vals.emplace_back(f.slope.value());
        rep.slope_mult_energy = mult_energy(NumberSet::of(std::move(slope_vals)));
    }

    // Max concurrent family among proper lines: exact pairwise search at desk
    // scale, exact point-stabbing over all grid points beyond the pairwise cap
    // (full pairwise intersection of ~N lines is not tractable; grid anchors
    // dominate the concurrency of lattice configurations).
    if (!plines.empty() && static_cast<long long>(plines.size()) <= cfg.pair_cap) {
        rep.concurrency_method = "pairwise";
        // A point met by m of the lines collects exactly C(m,2) intersecting
        // pairs, so the multiplicity is recovered by triangular inversion.
        std::unordered_map<PointKey, long long, PointKeyHash> pair_counts;
        for (std::size_t a = 0; a < plines.size(); ++a)
            for (std::size_t b = a + 1; b < plines.size(); ++b) {
                auto pt = line_intersection(plines[a], plines[b]);
                if (pt) ++pair_counts[*pt];
            }
        rep.max_concurrent = 1;
        for (const auto& [pt, c] : pair_counts) {
            const long long m = (1 + static_cast<long long>(std::llround(std::sqrt(8.0 * c + 1.0)))) / 2;
            // llround guards double rounding; verify exactly and adjust.
            long long mm = m;
            while (mm * (mm - 1) / 2 > c) --mm;
            while ((mm + 1) * mm / 2 <= c) ++mm;
            rep.max_concurrent = std::max(rep.max_concurrent, mm);
        }
    } else if (plines.empty()) {
        rep.concurrency_method = "pairwise";
        rep.max_concurrent = 0;
    } else {
        rep.concurrency_method = "grid-anchored";
        std::vector<std::int32_t> stab(static_cast<std::size_t>(N), 0);
        for (const auto& line : plines) {
            const auto trace = grid_line_trace(g, line);
            if (!trace) continue;
            long long x = trace->x0, y = trace->y0;
            for (long long i = 0; i < trace->count; ++i) {
                ++stab[static_cast<std::size_t>(y - 1) * g.w + (x - 1)];
                x += trace->dx;
                y += trace->dy;
            }
        }
        rep.max_concurrent = 0;
        for (std::int32_t v : stab) rep.max_concurrent = std::max<long long>(rep.max_concurrent, v);
    }
    rep.gamma_hat = (rep.max_concurrent >= 1 && N > 1)
                        ? std::log(static_cast<double>(rep.max_concurrent)) / std::log(static_cast<double>(N))
                        : 0.0;
    return rep;
}

} // namespace lattix
