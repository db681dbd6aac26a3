#include "lattix/sweep.hpp"

#include "lattix/io.hpp"

#include <cmath>

namespace lattix {

GridSpec grid_for(double alpha, long long n_target) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("grid_for: alpha must be in (0,1)");
    if (n_target < 4) throw std::invalid_argument("grid_for: n too small");
    const long long w = std::max<long long>(1, std::llround(std::pow(static_cast<double>(n_target), alpha)));
    const long long h = std::max<long long>(1, std::llround(std::pow(static_cast<double>(n_target), 1.0 - alpha)));
    return GridSpec{w, h};
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.sizes.size() < 3)
        throw std::invalid_argument("run_sweep: at least three sizes are required for a fit");
    for (std::size_t i = 1; i < spec.sizes.size(); ++i)
        if (spec.sizes[i] <= spec.sizes[i - 1])
            throw std::invalid_argument("run_sweep: sizes must be strictly increasing");
    if (spec.kind != "general" && spec.kind != "erdos")
        throw std::invalid_argument("run_sweep: unknown construction kind '" + spec.kind + "'");
    if (spec.fit_target != "incidence" && spec.fit_target != "rich_slopes" &&
        spec.fit_target != "family_size" && spec.fit_target != "energy")
        throw std::invalid_argument("run_sweep: unknown fit target '" + spec.fit_target + "'");

    SweepResult result;
    result.spec = spec;
    std::vector<std::pair<double, double>> raw;
    for (long long n : spec.sizes) {
        try {
            SweepPoint pt;
            pt.n_target = n;
            pt.grid = spec.kind == "erdos"
                          ? GridSpec{std::llround(std::sqrt(static_cast<double>(n))),
                                     std::llround(std::sqrt(static_cast<double>(n)))}
                          : grid_for(spec.alpha, n);
            pt.n_actual = pt.grid.point_count();

            Configuration cfg = spec.kind == "erdos"
                                    ? construct_erdos(pt.grid.w, pt.n_actual, spec.window, spec.k)
                                    : construct_general_alpha(pt.grid, spec.window, spec.k, pt.n_actual);
            pt.manifest = cfg.manifest;
            pt.incidences = incidences_fast(cfg.points, cfg.lines);

            AnalyzerConfig an;
            an.k = spec.k;
            an.pair_cap = spec.pair_cap;
            pt.report = verify_lattice_structure(pt.grid, cfg.lines, an, spec.window);

            if (spec.fit_target == "incidence") pt.value = static_cast<double>(pt.incidences);
            else if (spec.fit_target == "rich_slopes") pt.value = static_cast<double>(pt.report.rich_slopes);
            else if (spec.fit_target == "family_size") pt.value = static_cast<double>(pt.report.median_parallel);
            else pt.value = static_cast<double>(pt.report.slope_mult_energy);

            raw.emplace_back(static_cast<double>(pt.n_actual), pt.value);
            result.points.push_back(std::move(pt));
        } catch (const resource_limit_error& e) {
            throw resource_limit_error("sweep failed at N=" + std::to_string(n) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sweep failed at N=" + std::to_string(n) + ": " + e.what());
        }
    }
    result.fit = fit_loglog(raw, true);
    return result;
}

std::string emit_report(const SweepResult& result, const std::string& format) {
    if (format == "csv") return points_csv(result.fit);
    if (format == "svg-loglog") return loglog_svg(result.fit);
    if (format != "json") throw std::invalid_argument("emit_report: unknown format '" + format + "'");
    nlohmann::json points = nlohmann::json::array();
    for (const auto& pt : result.points) {
        points.push_back(nlohmann::json{
            {"n_target", pt.n_target},
            {"grid", {{"w", pt.grid.w}, {"h", pt.grid.h}}},
            {"n_actual", pt.n_actual},
            {"incidences", pt.incidences},
            {"value", pt.value},
            {"report", io::to_json(pt.report)},
            {"manifest", io::to_json(pt.manifest)},
        });
    }
    const nlohmann::json j{
        {"spec",
         {{"kind", result.spec.kind},
          {"alpha", result.spec.alpha},
          {"sizes", result.spec.sizes},
          {"fit_target", result.spec.fit_target},
          {"kt", result.spec.window.kt.to_string()},
          {"ks", result.spec.window.ks.to_string()},
          {"k", result.spec.k}}},
        {"points", points},
        {"fit", io::to_json(result.fit)},
    };
    return j.dump(2) + "\n";
}

} // namespace lattix
