#include "lattix/io.hpp"

#include <fstream>
#include <sstream>

namespace lattix::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

} // namespace

std::string write_points(const ProductSet& points) {
    std::string out;
    const auto as = points.A.values();
    const auto bs = points.B.values();
    for (const auto& a : as) {
        const std::string ast = a.to_string();
        for (const auto& b : bs) out += ast + " " + b.to_string() + "\n";
    }
    return out;
}

ProductSet parse_points(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Number> xs, ys;
    std::size_t n_points = 0;
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw std::invalid_argument("points file: expected 'x y' per line");
        xs.push_back(Number::parse(toks[0]));
        ys.push_back(Number::parse(toks[1]));
        ++n_points;
    }
    ProductSet p{NumberSet::of(xs), NumberSet::of(ys)};
    if (p.point_count() != static_cast<long long>(n_points))
        throw std::invalid_argument("points file: points do not form a Cartesian product");
    return p;
}

std::string write_lines(const std::vector<Line>& lines) {
    std::string out;
    for (const auto& l : lines) {
        if (l.slope.is_vertical())
            out += "V " + l.intercept.to_string() + "\n";
        else
            out += "S " + l.slope.value().to_string() + " " + l.intercept.to_string() + "\n";
    }
    return out;
}

std::vector<Line> parse_lines(const std::string& text) {
    std::istringstream in(text);
    std::string row;
    std::vector<Line> out;
    while (std::getline(in, row)) {
        const auto toks = tokenize(row);
        if (toks.empty()) continue;
        if (toks[0] == "V" && toks.size() == 2) {
            out.push_back(Line{Slope::vertical(), Number::parse(toks[1])});
        } else if (toks[0] == "S" && toks.size() == 3) {
            out.push_back(Line{Slope::of(Rat::parse(toks[1])), Number::parse(toks[2])});
        } else {
            throw std::invalid_argument("lines file: expected 'S slope c' or 'V c'");
        }
    }
    return out;
}

std::string write_set(const NumberSet& set) {
    std::string out;
    for (const auto& v : set.values()) out += v.to_string() + "\n";
    return out;
}

NumberSet parse_set(const std::string& text) {
    std::istringstream in(text);
    std::string row;
    std::vector<Number> vals;
    while (std::getline(in, row)) {
        const auto toks = tokenize(row);
        if (toks.empty()) continue;
        if (toks.size() != 1) throw std::invalid_argument("set file: expected one number per line");
        vals.push_back(Number::parse(toks[0]));
    }
    return NumberSet::of(std::move(vals));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

nlohmann::json to_json(const EnergyReport& r) {
    nlohmann::json j{
        {"set_sizes", {r.size_a, r.size_b}}, {"additive", r.additive},
        {"multiplicative", r.multiplicative}, {"sumset_size", r.sumset_size},
        {"method", r.method},
    };
    if (r.bipartite) j["bipartite"] = *r.bipartite;
    if (r.shifted) j["shifted"] = *r.shifted;
    return j;
}

nlohmann::json to_json(const StructureReport& r) {
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : r.families) {
        fams.push_back(nlohmann::json{
            {"slope", f.slope},
            {"size", f.size},
            {"pattern_size", f.pattern_size},
            {"intercept_coverage", f.intercept_coverage},
            {"intercepts_in_pattern", f.intercepts_in_pattern},
            {"intercept_add_energy", f.intercept_add_energy},
        });
    }
    return nlohmann::json{
        {"n_points", r.n_points},
        {"n_lines", r.n_lines},
        {"n_proper", r.n_proper},
        {"rich_slopes", r.rich_slopes},
        {"rich_threshold", r.rich_threshold},
        {"max_parallel", r.max_parallel},
        {"median_parallel", r.median_parallel},
        {"max_concurrent", r.max_concurrent},
        {"concurrency_method", r.concurrency_method},
        {"beta_hat", r.beta_hat},
        {"gamma_hat", r.gamma_hat},
        {"window_defined", r.window_defined},
        {"slope_set_match", r.slope_set_match},
        {"intercept_coverage", r.intercept_coverage},
        {"intercepts_subset", r.intercepts_subset},
        {"slope_mult_energy", r.slope_mult_energy},
        {"intercept_add_energy_histogram", r.intercept_add_energy_histogram},
        {"families", fams},
    };
}

nlohmann::json to_json(const ConstructManifest& m) {
    nlohmann::json slopes = nlohmann::json::array();
    for (const auto& s : m.slopes) {
        slopes.push_back(nlohmann::json{
            {"s", s.s}, {"t", s.t}, {"sign", s.sign}, {"lines", s.lines},
            {"count_min", s.count_min}, {"count_max", s.count_max},
        });
    }
    return nlohmann::json{
        {"kind", m.kind},
        {"grid", {{"w", m.grid.w}, {"h", m.grid.h}}},
        {"kt", m.kt.to_string()},
        {"ks", m.ks.to_string()},
        {"k", m.k},
        {"n_lines_requested", m.n_lines_requested},
        {"total_candidates", m.total_candidates},
        {"threshold_count", m.threshold_count},
        {"taken_at_threshold", m.taken_at_threshold},
        {"total_incidences", m.total_incidences},
        {"tie_break", m.tie_break},
        {"slopes", slopes},
    };
}

nlohmann::json to_json(const FitResult& f) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : f.points) pts.push_back({p[0], p[1], p[2], p[3]});
    return nlohmann::json{
        {"exponent", f.exponent},
        {"intercept", f.intercept},
        {"r_squared", f.r_squared},
        {"dropped_smallest", f.dropped_smallest},
        {"points", pts},
    };
}

std::string families_csv(const StructureReport& r) {
    std::string out = "slope,size,pattern_size,intercept_coverage,intercepts_in_pattern,intercept_add_energy\n";
    for (const auto& f : r.families) {
        char cov[32];
        std::snprintf(cov, sizeof cov, "%.6f", f.intercept_coverage);
        out += f.slope + "," + std::to_string(f.size) + "," + std::to_string(f.pattern_size) + "," +
               cov + "," + (f.intercepts_in_pattern ? "1" : "0") + "," +
               std::to_string(f.intercept_add_energy) + "\n";
    }
    return out;
}

} // namespace lattix::io
