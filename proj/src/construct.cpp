#include "lattix/construct.hpp"

#include <algorithm>

namespace lattix {

GapSetResult gap_set(const GapSpec& spec) {
    if (spec.steps.size() != spec.lengths.size())
        throw std::invalid_argument("gap_set: steps/lengths dimension mismatch");
    long long expected = 1;
    for (long n : spec.lengths) {
        if (n < 1) throw std::invalid_argument("gap_set: lengths must be positive");
        expected *= n;
        if (expected > 5'000'000) throw resource_limit_error("gap_set: progression too large");
    }
    std::vector<Number> vals{spec.a};
    for (std::size_t j = 0; j < spec.steps.size(); ++j) {
        std::vector<Number> next;
        next.reserve(vals.size() * static_cast<std::size_t>(spec.lengths[j]));
        for (const auto& v : vals) {
            Number cur = v;
            for (long kk = 0; kk < spec.lengths[j]; ++kk) {
                next.push_back(cur);
                if (kk + 1 < spec.lengths[j]) cur = cur + spec.steps[j];
            }
        }
        vals = std::move(next);
    }
    GapSetResult out;
    out.set = NumberSet::of(std::move(vals));
    out.proper = static_cast<long long>(out.set.size()) == expected;
    return out;
}

Configuration construct_elekes(long long r) {
    if (r < 1) throw std::invalid_argument("construct_elekes: r must be positive");
    if (r > 1024) throw resource_limit_error("construct_elekes: r too large to materialize");
    Configuration cfg;
    cfg.points = ProductSet{NumberSet::interval(r), NumberSet::interval(2 * r * r)};
    cfg.lines.reserve(static_cast<std::size_t>(r) * r * r);
    cfg.manifest.kind = "elekes";
    cfg.manifest.grid = GridSpec{r, 2 * r * r};
    cfg.manifest.n_lines_requested = r * r * r;
    cfg.manifest.total_candidates = r * r * r;
    cfg.manifest.threshold_count = r;
    cfg.manifest.taken_at_threshold = r * r * r;
    for (long long a = 1; a <= r; ++a) {
        for (long long b = 1; b <= r * r; ++b)
            cfg.lines.push_back(Line{Slope::of(Rat(a)), Number(b)});
        cfg.manifest.slopes.push_back(SlopeRecord{a, 1, +1, r * r, r, r});
    }
    cfg.manifest.total_incidences = r * r * r * r;
    return cfg;
}

namespace {

struct Candidate {
    std::int32_t slope_ord; // index into the (t, s, sign)-ordered slope list
    std::int32_t count;
    long long c_num;        // intercept numerator over denominator t
};

struct SignedSlope {
    long long s, t;
    int sign; // +1 before -1 in the tie-break order
};

} // namespace

Configuration construct_general_alpha(const GridSpec& g, const SlopeWindow& win, long long k,
                                      long long n_lines) {
    if (n_lines < 1) throw std::invalid_argument("construct_general_alpha: n_lines must be positive");
    if (k < 1) throw std::invalid_argument("construct_general_alpha: k must be positive");
    const std::vector<Rat> positive = window_slope_set(g, win); // validates alpha

    // Signed slopes in tie-break order: (t, s) ascending, + before -.
    std::vector<SignedSlope> slopes;
    slopes.reserve(positive.size() * 2);
    {
        std::vector<std::pair<long long, long long>> ts; // (t, s)
        for (const Rat& m : positive) {
            auto [sz, tz] = st_of(m);
            ts.emplace_back(tz.get_si(), sz.get_si());
        }
        std::sort(ts.begin(), ts.end());
        for (auto [t, s] : ts) {
            slopes.push_back(SignedSlope{s, t, +1});
            slopes.push_back(SignedSlope{s, t, -1});
        }
    }

    const long long w = g.w, h = g.h;
    const auto anchor_count = [&](long long s, long long t, long long i, long long j) {
        return std::min((w - i) / t, (h - j) / s) + 1;
    };

    // Pass 1: histogram of candidate counts. Anchors: the t leftmost columns
    // in full, plus the s bottom rows to the right of them (each line with a
    // grid point has exactly one such anchor).
    const long long max_count = std::max(w, h);
    std::vector<long long> hist(static_cast<std::size_t>(max_count) + 2, 0);
    long long total_candidates = 0;
    const auto for_each_anchor = [&](long long s, long long t, auto&& fn) {
        const long long col_i = std::min(t, w);
        for (long long i = 1; i <= col_i; ++i)
            for (long long j = 1; j <= h; ++j) fn(i, j);
        const long long row_j = std::min(s, h);
        for (long long i = col_i + 1; i <= w; ++i)
            for (long long j = 1; j <= row_j; ++j) fn(i, j);
    };
    for (const auto& sl : slopes) {
        for_each_anchor(sl.s, sl.t, [&](long long i, long long j) {
            ++hist[anchor_count(sl.s, sl.t, i, j)];
            ++total_candidates;
        });
    }
    if (total_candidates < n_lines)
        throw std::invalid_argument("construct_general_alpha: only " +
                                    std::to_string(total_candidates) + " candidate lines available");

    long long threshold = max_count, above = 0;
    while (threshold > 0 && above + hist[threshold] < n_lines) above += hist[threshold--];
    const long long need_at_threshold = n_lines - above;

    // Pass 2: collect candidates at or above the threshold.
    std::vector<Candidate> selected, ties;
    selected.reserve(static_cast<std::size_t>(above));
    for (std::size_t ord = 0; ord < slopes.size(); ++ord) {
        const auto& sl = slopes[ord];
        for_each_anchor(sl.s, sl.t, [&](long long i, long long j) {
            const long long c = anchor_count(sl.s, sl.t, i, j);
            if (c < threshold) return;
            // Intercept of the (possibly mirrored) line, over denominator t.
            long long c_num = j * sl.t - i * sl.s;
            if (sl.sign < 0) c_num = (h + 1) * sl.t - c_num;
            Candidate cand{static_cast<std::int32_t>(ord), static_cast<std::int32_t>(c), c_num};
            (c == threshold ? ties : selected).push_back(cand);
        });
    }
    std::sort(ties.begin(), ties.end(), [](const Candidate& a, const Candidate& b) {
        if (a.slope_ord != b.slope_ord) return a.slope_ord < b.slope_ord;
        return a.c_num < b.c_num;
    });
    ties.resize(static_cast<std::size_t>(need_at_threshold));
    selected.insert(selected.end(), ties.begin(), ties.end());
    std::sort(selected.begin(), selected.end(), [](const Candidate& a, const Candidate& b) {
        if (a.count != b.count) return a.count > b.count;
        if (a.slope_ord != b.slope_ord) return a.slope_ord < b.slope_ord;
        return a.c_num < b.c_num;
    });

    Configuration cfg;
    cfg.points = ProductSet::grid(g);
    cfg.manifest.kind = "general";
    cfg.manifest.grid = g;
    cfg.manifest.kt = win.kt;
    cfg.manifest.ks = win.ks;
    cfg.manifest.k = k;
    cfg.manifest.n_lines_requested = n_lines;
    cfg.manifest.total_candidates = total_candidates;
    cfg.manifest.threshold_count = threshold;
    cfg.manifest.taken_at_threshold = need_at_threshold;

    std::vector<SlopeRecord> recs(slopes.size());
    cfg.lines.reserve(selected.size());
    for (const auto& cand : selected) {
        const auto& sl = slopes[static_cast<std::size_t>(cand.slope_ord)];
        const Rat m = sl.sign > 0 ? Rat(sl.s, sl.t) : Rat(-sl.s, sl.t);
        cfg.lines.push_back(Line{Slope::of(m), Number(Rat(cand.c_num, sl.t))});
        SlopeRecord& rec = recs[static_cast<std::size_t>(cand.slope_ord)];
        if (rec.lines == 0) {
            rec = SlopeRecord{sl.s, sl.t, sl.sign, 0, cand.count, cand.count};
        }
        ++rec.lines;
        rec.count_min = std::min<long long>(rec.count_min, cand.count);
        rec.count_max = std::max<long long>(rec.count_max, cand.count);
        cfg.manifest.total_incidences += cand.count;
    }
    for (const auto& rec : recs)
        if (rec.lines > 0) cfg.manifest.slopes.push_back(rec);
    return cfg;
}

Configuration construct_erdos(long long m, long long n_lines, const SlopeWindow& win, long long k) {
    if (m < 2) throw std::invalid_argument("construct_erdos: m must be at least 2");
    Configuration cfg = construct_general_alpha(GridSpec{m, m}, win, k, n_lines);
    cfg.manifest.kind = "erdos";
    return cfg;
}

std::vector<Line> construct_pencil(const Number& center_x, const Number& center_y,
                                   const std::vector<Slope>& slopes) {
    for (std::size_t i = 0; i < slopes.size(); ++i)
        for (std::size_t j = i + 1; j < slopes.size(); ++j)
            if (slopes[i] == slopes[j])
                throw std::invalid_argument("construct_pencil: duplicate slopes");
    std::vector<Line> out;
    out.reserve(slopes.size());
    for (const auto& sl : slopes) {
        if (sl.is_vertical()) {
            out.push_back(Line{sl, center_x});
        } else {
            out.push_back(Line{sl, center_y - Number(sl.value()) * center_x});
        }
    }
    return out;
}

} // namespace lattix
