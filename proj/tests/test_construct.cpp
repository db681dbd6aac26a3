#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattix/construct.hpp"
#include "lattix/fit.hpp"
#include "lattix/io.hpp"
#include "oracles.hpp"

#include <cmath>
#include <unordered_set>

using namespace lattix;

TEST_CASE("elekes construction") {
    const auto tiny = construct_elekes(1);
    CHECK(tiny.points.point_count() == 2);
    CHECK(tiny.lines.size() == 1);
    CHECK(incidences_fast(tiny.points, tiny.lines) == 1);

    const auto small = construct_elekes(2);
    CHECK(small.points.point_count() == 16);
    CHECK(small.lines.size() == 8);
    CHECK(incidences_fast(small.points, small.lines) == 16);
    // Every line meets exactly r points.
    for (long long c : line_counts(small.points, small.lines)) CHECK(c == 2);

    const auto big = construct_elekes(8);
    CHECK(big.lines.size() == 512);
    const long long inc = incidences_fast(big.points, big.lines);
    CHECK(inc == 4096); // r^4 = |L|^{4/3}
    CHECK(inc == big.manifest.total_incidences);
    CHECK_THROWS_AS(construct_elekes(0), std::invalid_argument);
}

TEST_CASE("general construction on a 4x4 grid") {
    const GridSpec g{4, 4};
    const SlopeWindow win{Rat(2), Rat(2)};
    const long long avail = construct_general_alpha(g, win, 4, 1).manifest.total_candidates;
    const auto all = construct_general_alpha(g, win, 4, avail); // everything available
    CHECK(static_cast<long long>(all.lines.size()) == avail);
    // The slope-1 family follows the column/row pattern with counts 4,3,3,2,2,1,1.
    std::vector<long long> diag_counts;
    for (std::size_t i = 0; i < all.lines.size(); ++i)
        if (all.lines[i].slope == Slope::of(Rat(1)))
            diag_counts.push_back(grid_line_count(g, all.lines[i]));
    std::sort(diag_counts.begin(), diag_counts.end(), std::greater<>());
    CHECK(diag_counts == std::vector<long long>{4, 3, 3, 2, 2, 1, 1});
}

TEST_CASE("general construction incidence density") {
    const GridSpec g{64, 64};
    const auto cfg = construct_general_alpha(g, SlopeWindow{}, 4, g.point_count());
    const double ratio = static_cast<double>(incidences_fast(cfg.points, cfg.lines)) /
                         std::pow(static_cast<double>(g.point_count()), 4.0 / 3.0);
    CHECK(ratio >= 0.1);
    CHECK(ratio <= 10.0);
    CHECK(static_cast<long long>(cfg.lines.size()) == g.point_count());
    // The counting routes agree: anchor arithmetic vs the residue-class counter.
    CHECK(incidences_fast(cfg.points, cfg.lines) == cfg.manifest.total_incidences);
}

TEST_CASE("selection keeps only full lines when few are requested") {
    // With a small budget every emitted line has the maximal count of its
    // class: ceil(w/t) or ceil(w/t)-1 non-steep, ceil(h/s) or ceil(h/s)-1 steep.
    const GridSpec g{10, 11};
    const auto cfg = construct_general_alpha(g, SlopeWindow{}, 4, 20);
    REQUIRE(cfg.lines.size() == 20);
    for (const auto& line : cfg.lines) {
        auto [sz, tz] = st_of(line.slope.value().abs());
        const long long s = sz.get_si(), t = tz.get_si();
        const long long count = grid_line_count(g, line);
        const long long cap = steepness(g, line.slope.value().abs()) == Steepness::Steep
                                  ? (g.h + s - 1) / s
                                  : (g.w + t - 1) / t;
        CHECK(count >= cap - 1);
        CHECK(count <= cap);
    }
}

TEST_CASE("construction errors") {
    const long long avail =
        construct_general_alpha(GridSpec{4, 4}, SlopeWindow{}, 4, 1).manifest.total_candidates;
    CHECK_THROWS_AS(construct_general_alpha(GridSpec{4, 4}, SlopeWindow{}, 4, avail + 1),
                    std::invalid_argument);
    try {
        construct_general_alpha(GridSpec{4, 4}, SlopeWindow{}, 4, avail + 1);
    } catch (const std::invalid_argument& e) {
        // The available count is reported.
        CHECK(std::string(e.what()).find(std::to_string(avail)) != std::string::npos);
    }
    CHECK_THROWS_AS(construct_general_alpha(GridSpec{4, 4}, SlopeWindow{}, 0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_erdos(1, 4), std::invalid_argument);
}

TEST_CASE("construction is deterministic") {
    const GridSpec g{28, 147};
    const auto a = construct_general_alpha(g, SlopeWindow{}, 4, 2000);
    const auto b = construct_general_alpha(g, SlopeWindow{}, 4, 2000);
    CHECK(io::write_lines(a.lines) == io::write_lines(b.lines));
    CHECK(io::to_json(a.manifest).dump() == io::to_json(b.manifest).dump());
}

TEST_CASE("no duplicate lines") {
    const auto cfg = construct_general_alpha(GridSpec{28, 147}, SlopeWindow{}, 4, 4116);
    std::unordered_set<Line, LineHash> uniq(cfg.lines.begin(), cfg.lines.end());
    CHECK(uniq.size() == cfg.lines.size());
}

TEST_CASE("ranking is by count, then slope order, then intercept") {
    const auto cfg = construct_general_alpha(GridSpec{16, 16}, SlopeWindow{}, 4, 200);
    const auto counts = line_counts(cfg.points, cfg.lines);
    for (std::size_t i = 1; i < cfg.lines.size(); ++i) CHECK(counts[i - 1] >= counts[i]);
}

TEST_CASE("erdos delegates to the square grid") {
    const auto tiny = construct_erdos(4, 20);
    const auto tiny_g = construct_general_alpha(GridSpec{4, 4}, SlopeWindow{}, 4, 20);
    CHECK(io::write_lines(tiny.lines) == io::write_lines(tiny_g.lines));
    const auto e = construct_erdos(16, 120);
    const auto g = construct_general_alpha(GridSpec{16, 16}, SlopeWindow{}, 4, 120);
    CHECK(io::write_lines(e.lines) == io::write_lines(g.lines));
    CHECK(e.manifest.kind == "erdos");

    // m = 2 offers at least the two diagonals.
    const auto small = construct_erdos(2, 2);
    bool has_up = false, has_down = false;
    for (const auto& line : small.lines) {
        has_up = has_up || line.slope == Slope::of(Rat(1));
        has_down = has_down || line.slope == Slope::of(Rat(-1));
    }
    CHECK(has_up);
    CHECK(has_down);
}

TEST_CASE("erdos incidence exponent across a small sweep") {
    std::vector<std::pair<double, double>> pts;
    for (long long m : {16, 32, 64}) {
        const auto cfg = construct_erdos(m, m * m);
        pts.emplace_back(static_cast<double>(m) * m,
                         static_cast<double>(incidences_fast(cfg.points, cfg.lines)));
    }
    const auto fit = fit_loglog(pts, false);
    CHECK(fit.exponent >= 1.25);
    CHECK(fit.exponent <= 1.42);
}

TEST_CASE("gap_set") {
    const GapSetResult ap = gap_set(GapSpec{Number(1), {Number(1)}, {5}});
    CHECK(ap.proper);
    CHECK(ap.set.values() == NumberSet::interval(5).values());

    const GapSetResult two = gap_set(GapSpec{Number(0), {Number(1), Number(10)}, {3, 2}});
    CHECK(two.proper);
    std::vector<Number> expect{Number(0), Number(1), Number(2), Number(10), Number(11), Number(12)};
    CHECK(two.set.values() == expect);

    const GapSetResult collide = gap_set(GapSpec{Number(0), {Number(1), Number(2)}, {3, 2}});
    CHECK_FALSE(collide.proper);
    CHECK(collide.set.size() == 5);

    CHECK_THROWS_AS(gap_set(GapSpec{Number(0), {Number(1)}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(gap_set(GapSpec{Number(0), {Number(1)}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("gap sumset sizes") {
    // 1-dimensional progression: |A+A| = 2|A| - 1.
    const auto ap = gap_set(GapSpec{Number(3), {Number(Rat(1, 2))}, {9}});
    CHECK(sumset(ap.set).size() == 2 * ap.set.size() - 1);
    // Proper 2-dimensional progression: |A+A| <= 4|A|.
    const auto g2 = gap_set(GapSpec{Number(0), {Number(1), Number(100)}, {5, 4}});
    REQUIRE(g2.proper);
    CHECK(sumset(g2.set).size() <= 4 * g2.set.size());
}

TEST_CASE("construct_pencil") {
    const auto p = construct_pencil(Number(0), Number(0), {Slope::of(Rat(1)), Slope::of(Rat(2))});
    CHECK(p[0] == Line{Slope::of(Rat(1)), Number(0)});
    CHECK(p[1] == Line{Slope::of(Rat(2)), Number(0)});

    const auto q = construct_pencil(Number(1), Number(1), {Slope::of(Rat(1, 2))});
    CHECK(q[0].intercept == Number(Rat(1, 2)));

    const auto v = construct_pencil(Number(7), Number(2), {Slope::vertical()});
    CHECK(v[0].slope.is_vertical());
    CHECK(v[0].intercept == Number(7));

    CHECK_THROWS_AS(construct_pencil(Number(0), Number(0), {Slope::of(Rat(1)), Slope::of(Rat(1))}),
                    std::invalid_argument);
}
