#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattix/construct.hpp"
#include "lattix/geom.hpp"
#include "oracles.hpp"

#include <random>

using namespace lattix;

namespace {

Line sloped(long s, long t, Rat c) { return Line{Slope::of(Rat(s, t)), Number(std::move(c))}; }

// Line of slope s/t through the grid point (x0, y0).
Line through(long s, long t, long x0, long y0) {
    return Line{Slope::of(Rat(s, t)), Number(Rat(y0) - Rat(s, t) * Rat(x0))};
}

} // namespace

TEST_CASE("steepness") {
    const GridSpec g{10, 11};
    CHECK(steepness(g, Rat(1, 3)) == Steepness::NonSteep);
    CHECK(steepness(g, Rat(2)) == Steepness::Steep);
    CHECK(steepness(g, Rat(11, 10)) == Steepness::NonSteep); // boundary goes non-steep
    CHECK(steepness(GridSpec{8, 8}, Rat(1)) == Steepness::NonSteep);
    CHECK_THROWS_AS(steepness(g, Rat(0)), std::invalid_argument);
}

TEST_CASE("grid_line_count reference values on the 10x11 grid") {
    const GridSpec g{10, 11};
    const Line shallow = through(1, 3, 1, 1);
    CHECK(grid_line_count(g, shallow) == 4);
    CHECK(grid_line_count(g, shallow) == oracle::grid_line_count(g, shallow));
    const Line steep = through(2, 1, 1, 1);
    CHECK(grid_line_count(g, steep) == 6);
    CHECK(grid_line_count(g, steep) == oracle::grid_line_count(g, steep));
    CHECK(grid_line_count(g, through(1, 1, 1, 1)) == 10);

    // 4 and 6 are also the maxima over all placements of those slopes.
    long long best_shallow = 0, best_steep = 0;
    for (long x = 1; x <= 10; ++x)
        for (long y = 1; y <= 11; ++y) {
            best_shallow = std::max(best_shallow, grid_line_count(g, through(1, 3, x, y)));
            best_steep = std::max(best_steep, grid_line_count(g, through(2, 1, x, y)));
        }
    CHECK(best_shallow == 4);
    CHECK(best_steep == 6);
}

TEST_CASE("grid_line_count equals brute force") {
    std::mt19937 rng(31);
    const GridSpec grids[] = {{7, 13}, {10, 11}, {16, 16}, {24, 9}};
    for (const auto& g : grids) {
        for (long s = 1; s <= 6; ++s)
            for (long t = 1; t <= 6; ++t) {
                if (std::gcd(s, t) != 1) continue;
                for (int i = 0; i < 12; ++i) {
                    // Intercepts spanning the grid, including non-lattice ones.
                    const Rat c(static_cast<long>(rng() % (3 * g.h)) - g.h,
                                1 + static_cast<long>(rng() % 4));
                    for (const Line& line : {sloped(s, t, c), sloped(-s, t, c)}) {
                        const long long fast = grid_line_count(g, line);
                        CHECK(fast == oracle::grid_line_count(g, line));
                        const long long cap = std::min((g.w + t - 1) / t, (g.h + s - 1) / s);
                        CHECK(fast <= cap);
                    }
                }
            }
    }
    // All slopes with s, t <= 10 on the 50x50 grid.
    const GridSpec big{50, 50};
    for (long s = 1; s <= 10; ++s)
        for (long t = 1; t <= 10; ++t) {
            if (std::gcd(s, t) != 1) continue;
            for (int i = 0; i < 8; ++i) {
                const Rat c(static_cast<long>(rng() % 200) - 75, 1 + static_cast<long>(rng() % 3));
                for (const Line& line : {sloped(s, t, c), sloped(-s, t, c)}) {
                    const long long fast = grid_line_count(big, line);
                    CHECK(fast == oracle::grid_line_count(big, line));
                    CHECK(fast <= std::min((big.w + t - 1) / t, (big.h + s - 1) / s));
                }
            }
        }
}

TEST_CASE("mirroring preserves counts") {
    const GridSpec g{12, 17};
    std::mt19937 rng(37);
    for (int i = 0; i < 60; ++i) {
        const long s = 1 + static_cast<long>(rng() % 5), t = 1 + static_cast<long>(rng() % 5);
        if (std::gcd(s, t) != 1) continue;
        const Rat c(static_cast<long>(rng() % 40) - 20, 1 + static_cast<long>(rng() % 3));
        CHECK(grid_line_count(g, sloped(s, t, c)) ==
              grid_line_count(g, sloped(-s, t, Rat(g.h + 1) - c)));
    }
}

TEST_CASE("degenerate lines on the grid") {
    const GridSpec g{10, 11};
    // Rational slope with an irrational intercept never hits lattice points.
    CHECK(grid_line_count(g, Line{Slope::of(Rat(1, 2)), Number(QuadExt(Rat(0), Rat(1), 2))}) == 0);
    CHECK(grid_line_count(g, Line{Slope::vertical(), Number(3)}) == 11);
    CHECK(grid_line_count(g, Line{Slope::vertical(), Number(Rat(1, 2))}) == 0);
    CHECK(grid_line_count(g, Line{Slope::vertical(), Number(11)}) == 0); // 11 > w
    CHECK(grid_line_count(g, Line{Slope::of(Rat(0)), Number(11)}) == 10);
    CHECK(grid_line_count(g, Line{Slope::of(Rat(0)), Number(Rat(1, 3))}) == 0);
    CHECK(grid_line_count(g, Line{Slope::of(Rat(5, 3)), Number(Rat(1, 2))}) == 0); // den(c) != 3
}

TEST_CASE("incidence counting examples") {
    const ProductSet square{NumberSet::interval(2), NumberSet::interval(2)};
    CHECK(incidences_fast(square, {}) == 0);
    const std::vector<Line> diag{through(1, 1, 1, 1)};
    CHECK(incidences_fast(square, diag) == 2);
    CHECK(incidences_oracle(square, diag, 1000) == 2);

    // Elekes instance with r = 2: 16 points, 8 lines, 16 incidences.
    const auto cfg = construct_elekes(2);
    CHECK(cfg.points.point_count() == 16);
    CHECK(cfg.lines.size() == 8);
    CHECK(incidences_fast(cfg.points, cfg.lines) == 16);
    CHECK(incidences_oracle(cfg.points, cfg.lines, 1000) == 16);
    CHECK(oracle::incidences(cfg.points, cfg.lines) == 16);
}

TEST_CASE("fast counter equals the oracle on random instances") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<long> coord(-8, 8);
    const Number root3{QuadExt(Rat(0), Rat(1), 3)};
    for (int instance = 0; instance < 197; ++instance) {
        // Random product set; occasionally irrational coordinates.
        std::vector<Number> xs, ys;
        const int na = 2 + static_cast<int>(rng() % 12), nb = 2 + static_cast<int>(rng() % 12);
        for (int i = 0; i < na; ++i) {
            Number v{Rat(coord(rng), 1 + static_cast<long>(rng() % 3))};
            if (instance % 7 == 0 && i % 3 == 0) v = v + root3;
            xs.push_back(v);
        }
        for (int i = 0; i < nb; ++i) ys.emplace_back(Rat(coord(rng), 1 + static_cast<long>(rng() % 3)));
        const ProductSet P{NumberSet::of(xs), NumberSet::of(ys)};

        std::vector<Line> lines;
        const int nl = 1 + static_cast<int>(rng() % 20);
        for (int i = 0; i < nl; ++i) {
            if (i % 9 == 8) {
                lines.push_back(Line{Slope::vertical(), xs[rng() % xs.size()]});
            } else {
                const Rat m(coord(rng), 1 + static_cast<long>(rng() % 3));
                // Half the lines pass through a product-set point.
                if (i % 2 == 0) {
                    const Number x = xs[rng() % xs.size()], y = ys[rng() % ys.size()];
                    lines.push_back(Line{Slope::of(m), y - Number(m) * x});
                } else {
                    lines.push_back(Line{Slope::of(m), Number(Rat(coord(rng), 2))});
                }
            }
        }
        const long long fast = incidences_fast(P, lines);
        CHECK(fast == incidences_oracle(P, lines, 1'000'000));
        CHECK(fast == oracle::incidences(P, lines));
    }
    // Grid instances at larger scale, against the oracle; the last one
    // touches |P| ~ 10^4 with |L| = 10^3.
    for (long w : {40, 64}) {
        const GridSpec g{w, 2 * w};
        const ProductSet P = ProductSet::grid(g);
        std::vector<Line> lines;
        for (int i = 0; i < 50; ++i)
            lines.push_back(through(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 4),
                                    1 + static_cast<long>(rng() % w), 1 + static_cast<long>(rng() % w)));
        CHECK(incidences_fast(P, lines) == incidences_oracle(P, lines, 100'000'000));
    }
    {
        const GridSpec g{96, 96};
        const ProductSet P = ProductSet::grid(g);
        std::vector<Line> lines;
        for (int i = 0; i < 1000; ++i)
            lines.push_back(through(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 6),
                                    1 + static_cast<long>(rng() % 96), 1 + static_cast<long>(rng() % 96)));
        CHECK(incidences_fast(P, lines) == incidences_oracle(P, lines, 100'000'000));
    }
}

TEST_CASE("oracle cap") {
    const ProductSet P = ProductSet::grid(GridSpec{10, 10});
    const std::vector<Line> lines(5, through(1, 1, 1, 1));
    CHECK_THROWS_AS(incidences_oracle(P, lines, 100), resource_limit_error);
}

TEST_CASE("classify_proper") {
    // N = 1024, N^(1/3) ~ 10.08, k = 2: proper iff count in (5.04, 20.16].
    const GridSpec g{16, 64};
    const ProductSet P = ProductSet::grid(g);
    AnalyzerConfig cfg;
    cfg.k = 2;
    const std::vector<Line> lines{
        through(1, 1, 1, 53),                     // 12 points: proper
        sloped(1, 1, Rat(100)),                   // 0 points: underfull
        through(1, 1, 1, 1),                      // 16 points: proper
        Line{Slope::vertical(), Number(3)},       // 64 points: overfull
        through(1, 3, 1, 1),                      // 6 points: proper
        through(3, 1, 1, 60),                     // 2 points: underfull
    };
    CHECK(grid_line_count(g, lines[0]) == 12);
    const auto part = classify_proper(P, lines, cfg);
    CHECK(part.proper == std::vector<std::size_t>{0, 2, 4});
    CHECK(part.underfull == std::vector<std::size_t>{1, 5});
    CHECK(part.overfull == std::vector<std::size_t>{3});
}

TEST_CASE("axis-parallel lines are never proper for small k") {
    // Every axis-parallel line meets w, h, or 0 points; with k = 2 neither
    // w = 10 nor h = 11 lies in (2.40, 9.58] around N^(1/3) = 4.79.
    const GridSpec g{10, 11};
    const ProductSet P = ProductSet::grid(g);
    AnalyzerConfig cfg;
    cfg.k = 2;
    std::vector<Line> lines;
    for (long x = 1; x <= 10; ++x) lines.push_back(Line{Slope::vertical(), Number(x)});
    for (long y = 1; y <= 11; ++y) lines.push_back(Line{Slope::of(Rat(0)), Number(y)});
    const auto part = classify_proper(P, lines, cfg);
    CHECK(part.proper.empty());
}

TEST_CASE("product set grid detection") {
    CHECK(ProductSet::grid(GridSpec{3, 4}).as_grid().has_value());
    const ProductSet p{NumberSet::of({Number(1), Number(2), Number(4)}), NumberSet::interval(2)};
    CHECK_FALSE(p.as_grid().has_value());
    const ProductSet q{NumberSet::of({Number(Rat(1, 2)), Number(1)}), NumberSet::interval(2)};
    CHECK_FALSE(q.as_grid().has_value());
}
