// lattix — exact lattice incidence and energy toolkit.
//
// Subcommands: construct, count, analyze, energy, totient, sweep.
// Exit codes: 0 success, 1 validation error, 2 resource-limit error, with a
// machine-readable error record on stderr.

#include "lattix/io.hpp"
#include "lattix/numtheory.hpp"
#include "lattix/parallel.hpp"
#include "lattix/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>

namespace {

using nlohmann::json;

lattix::Number parse_shift(const std::string& text) {
    // "p/q" or "sqrt:D:p/q:r/s" meaning p/q + (r/s)*sqrt(D).
    if (text.rfind("sqrt:", 0) != 0) return lattix::Number(lattix::Rat::parse(text));
    std::vector<std::string> parts;
    std::size_t pos = 5;
    while (pos <= text.size()) {
        const auto next = text.find(':', pos);
        parts.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("shift: expected sqrt:D:p/q:r/s");
    const long d = std::stol(parts[0]);
    return lattix::Number(
        lattix::QuadExt(lattix::Rat::parse(parts[1]), lattix::Rat::parse(parts[2]), d));
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        lattix::io::write_file(path, content);
}

struct CommonArgs {
    long long threads = 1;
    long long seed = 0; // reserved for randomized baselines; commands are deterministic
    long long oracle_cap = 20'000'000;
};

int run(int argc, char** argv) {
    CLI::App app{"exact incidence counting, extremal lattice constructions, and energy analysis"};
    app.require_subcommand(1);
    // --h is a real option (grid height), so help stays on --help only.
    app.set_help_flag("--help", "print help");
    CommonArgs common;
    app.add_option("--threads", common.threads, "worker threads (results are thread-count independent)");
    app.add_option("--seed", common.seed, "seed for randomized baselines (reserved)");
    app.add_option("--oracle-cap", common.oracle_cap, "max |P|*|L| for brute-force counting");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "generate an extremal configuration");
    c_cmd->set_help_flag("--help", "print help");
    std::string c_kind = "general", c_points_path, c_lines_path, c_manifest_path;
    long long c_w = 0, c_h = 0, c_lines_n = 0, c_k = 4;
    std::string c_kt = "2", c_ks = "2";
    c_cmd->add_option("--kind", c_kind, "erdos|elekes|general")->required();
    c_cmd->add_option("--w", c_w, "grid width (elekes: r; erdos: m)")->required();
    c_cmd->add_option("--h", c_h, "grid height (general only)");
    c_cmd->add_option("--kt", c_kt, "non-steep window constant (rational or decimal)");
    c_cmd->add_option("--ks", c_ks, "steep window constant");
    c_cmd->add_option("--k", c_k, "properness constant");
    c_cmd->add_option("--lines", c_lines_n, "number of lines to emit");
    c_cmd->add_option("--out-points", c_points_path, "points file (default stdout)");
    c_cmd->add_option("--out-lines", c_lines_path, "lines file");
    c_cmd->add_option("--manifest", c_manifest_path, "manifest JSON file");

    // count
    auto* n_cmd = app.add_subcommand("count", "count incidences");
    std::string n_points_path, n_lines_path;
    bool n_oracle = false;
    n_cmd->add_option("--points", n_points_path)->required();
    n_cmd->add_option("--lines", n_lines_path)->required();
    n_cmd->add_flag("--oracle", n_oracle, "use the brute-force counter");

    // analyze
    auto* a_cmd = app.add_subcommand("analyze", "family-structure report for a lattice configuration");
    std::string a_points_path, a_lines_path, a_kt = "2", a_ks = "2";
    long long a_k = 4, a_pair_cap = 20'000;
    double a_rich_c = 0;
    bool a_csv = false, a_json = false;
    a_cmd->add_option("--points", a_points_path)->required();
    a_cmd->add_option("--lines", a_lines_path)->required();
    a_cmd->add_option("--k", a_k, "properness constant");
    a_cmd->add_option("--kt", a_kt);
    a_cmd->add_option("--ks", a_ks);
    a_cmd->add_option("--pair-cap", a_pair_cap, "max |L| for pairwise concurrency (0: grid-anchored)");
    a_cmd->add_option("--rich-c", a_rich_c, "rich threshold as c*N^(2/3); default max_parallel/8");
    a_cmd->add_flag("--json", a_json, "emit the JSON report (default)");
    a_cmd->add_flag("--csv", a_csv, "emit one CSV row per family");

    // energy
    auto* e_cmd = app.add_subcommand("energy", "additive/multiplicative energy report for a set");
    std::string e_set_path, e_shift;
    long long e_interval = 0;
    bool e_oracle = false;
    e_cmd->add_option("--set", e_set_path, "set file, one number per line")->required();
    e_cmd->add_option("--interval", e_interval, "also compute E^x(A,[N])");
    e_cmd->add_option("--shift", e_shift, "p/q or sqrt:D:p/q:r/s; E^x(A,[N]+x)");
    e_cmd->add_flag("--oracle", e_oracle, "use quadruple-enumeration oracles");

    // totient
    auto* t_cmd = app.add_subcommand("totient", "totient-sum growth checks");
    long long t_limit = 0;
    std::string t_check = "a";
    t_cmd->add_option("--limit", t_limit)->required();
    t_cmd->add_option("--check", t_check, "a|b|c|d|e")->required();

    // sweep
    auto* s_cmd = app.add_subcommand("sweep", "size sweep with a log-log exponent fit");
    std::string s_kind = "general", s_fit = "incidence", s_sizes, s_kt = "2", s_ks = "2";
    std::string s_csv_path, s_json_path, s_svg_path;
    double s_alpha = 0.5;
    long long s_k = 4, s_pair_cap = 0;
    s_cmd->add_option("--kind", s_kind, "general|erdos");
    s_cmd->add_option("--alpha", s_alpha);
    s_cmd->add_option("--sizes", s_sizes, "comma-separated N values (at least 3)")->required();
    s_cmd->add_option("--fit", s_fit, "incidence|rich_slopes|family_size|energy");
    s_cmd->add_option("--kt", s_kt);
    s_cmd->add_option("--ks", s_ks);
    s_cmd->add_option("--k", s_k);
    s_cmd->add_option("--pair-cap", s_pair_cap);
    s_cmd->add_option("--out-csv", s_csv_path);
    s_cmd->add_option("--out-json", s_json_path);
    s_cmd->add_option("--out-svg", s_svg_path);

    app.parse(argc, argv);
    lattix::set_thread_count(static_cast<int>(common.threads));

    if (*c_cmd) {
        lattix::Configuration cfg;
        if (c_kind == "elekes") {
            cfg = lattix::construct_elekes(c_w);
        } else {
            lattix::SlopeWindow win{lattix::Rat::parse_decimal(c_kt), lattix::Rat::parse_decimal(c_ks)};
            if (c_kind == "erdos") {
                const long long n_lines = c_lines_n > 0 ? c_lines_n : c_w * c_w;
                cfg = lattix::construct_erdos(c_w, n_lines, win, c_k);
            } else if (c_kind == "general") {
                if (c_h < 1) throw std::invalid_argument("construct: --h required for --kind general");
                const long long n_lines = c_lines_n > 0 ? c_lines_n : c_w * c_h;
                cfg = lattix::construct_general_alpha(lattix::GridSpec{c_w, c_h}, win, c_k, n_lines);
            } else {
                throw std::invalid_argument("construct: unknown kind '" + c_kind + "'");
            }
        }
        if (!c_points_path.empty()) emit(c_points_path, lattix::io::write_points(cfg.points));
        if (!c_lines_path.empty()) emit(c_lines_path, lattix::io::write_lines(cfg.lines));
        const std::string manifest = lattix::io::to_json(cfg.manifest).dump(2) + "\n";
        emit(c_manifest_path.empty() ? "-" : c_manifest_path, manifest);
        return 0;
    }

    if (*n_cmd) {
        const auto points = lattix::io::parse_points(lattix::io::read_file(n_points_path));
        const auto lines = lattix::io::parse_lines(lattix::io::read_file(n_lines_path));
        long long total = 0;
        std::map<std::string, long long> histogram;
        if (n_oracle) {
            total = lattix::incidences_oracle(points, lines, common.oracle_cap);
            for (const auto& line : lines) {
                const std::vector<lattix::Line> one{line};
                ++histogram[std::to_string(lattix::incidences_oracle(points, one, common.oracle_cap))];
            }
        } else {
            for (long long c : lattix::line_counts(points, lines)) {
                total += c;
                ++histogram[std::to_string(c)];
            }
        }
        json j{{"incidences", total}, {"per_line_histogram", histogram}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (*a_cmd) {
        const auto points = lattix::io::parse_points(lattix::io::read_file(a_points_path));
        const auto lines = lattix::io::parse_lines(lattix::io::read_file(a_lines_path));
        const auto grid = points.as_grid();
        if (!grid) throw std::invalid_argument("analyze: points must form an integer grid [w]x[h]");
        lattix::AnalyzerConfig cfg;
        cfg.k = a_k;
        cfg.oracle_cap = common.oracle_cap;
        cfg.pair_cap = a_pair_cap;
        if (a_rich_c > 0) cfg.rich_c = a_rich_c;
        lattix::SlopeWindow win{lattix::Rat::parse_decimal(a_kt), lattix::Rat::parse_decimal(a_ks)};
        const auto report = lattix::verify_lattice_structure(*grid, lines, cfg, win);
        if (a_csv)
            std::cout << lattix::io::families_csv(report);
        else
            std::cout << lattix::io::to_json(report).dump(2) << "\n";
        return 0;
    }

    if (*e_cmd) {
        const auto set = lattix::io::parse_set(lattix::io::read_file(e_set_path));
        std::optional<long> interval;
        if (e_interval > 0) interval = static_cast<long>(e_interval);
        std::optional<lattix::Number> shift;
        if (!e_shift.empty()) {
            if (!interval) throw std::invalid_argument("energy: --shift requires --interval");
            shift = parse_shift(e_shift);
        }
        const auto report = lattix::energy_report(set, interval, shift, e_oracle);
        std::cout << lattix::io::to_json(report).dump(2) << "\n";
        return 0;
    }

    if (*t_cmd) {
        if (t_limit < 1) throw std::invalid_argument("totient: --limit must be positive");
        if (t_check.size() != 1 || t_check[0] < 'a' || t_check[0] > 'e')
            throw std::invalid_argument("totient: --check must be one of a|b|c|d|e");
        const auto table = lattix::TotientTable::build(static_cast<std::uint32_t>(t_limit));
        std::vector<long long> checkpoints;
        for (long long n = 10; n < t_limit; n *= 10) checkpoints.push_back(n);
        checkpoints.push_back(t_limit);
        for (long long n : checkpoints) {
            const auto sums = lattix::totient_sum(table, static_cast<std::uint64_t>(n));
            json j;
            j["lemma"] = t_check;
            j["n"] = n;
            if (t_check == "a") {
                j["lhs"] = sums.sum_phi.get_str();
                j["rhs"] = mpz_class(lattix::to_mpz(n) * lattix::to_mpz(n)).get_str();
                j["ratio"] = sums.sum_phi.get_d() / (static_cast<double>(n) * static_cast<double>(n));
            } else if (t_check == "b") {
                const double mid =
                    (sums.phi_over_j_lo.get_d() + sums.phi_over_j_hi.get_d()) / (2.0 * 4294967296.0);
                j["lhs"] = mid;
                j["rhs"] = n;
                j["ratio"] = mid / static_cast<double>(n);
            } else if (t_check == "c") {
                const std::uint64_t m = 12;
                const auto lhs =
                    lattix::phi_m(m * static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n));
                const auto rhs = m * lattix::phi(static_cast<std::uint64_t>(n));
                j["lhs"] = lhs;
                j["rhs"] = rhs;
                j["ratio"] = static_cast<double>(lhs) / static_cast<double>(rhs);
            } else if (t_check == "d") {
                // |phi_m(n) - (m/n) phi(n)| vs 2^omega(n), at m = limit.
                const std::uint64_t m = static_cast<std::uint64_t>(t_limit);
                const auto pm = lattix::phi_m(m, static_cast<std::uint64_t>(n));
                const lattix::Rat expected(
                    lattix::to_mpz(static_cast<long long>(m)) * static_cast<long>(table.phi[n]),
                    lattix::to_mpz(n));
                const lattix::Rat diff =
                    (lattix::Rat(lattix::to_mpz(static_cast<long long>(pm))) - expected).abs();
                j["lhs"] = diff.approx();
                j["rhs"] = static_cast<long long>(1) << table.omega[n];
                j["ratio"] = diff.approx() / static_cast<double>(1LL << table.omega[n]);
            } else {
                const double rhs = static_cast<double>(n) * std::log(std::log(static_cast<double>(n)));
                j["lhs"] = sums.sum_two_omega.get_str();
                j["rhs"] = rhs;
                j["ratio"] = sums.sum_two_omega.get_d() / rhs;
            }
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    if (*s_cmd) {
        lattix::SweepSpec spec;
        spec.kind = s_kind;
        spec.alpha = s_alpha;
        spec.fit_target = s_fit;
        spec.window = lattix::SlopeWindow{lattix::Rat::parse_decimal(s_kt), lattix::Rat::parse_decimal(s_ks)};
        spec.k = s_k;
        spec.pair_cap = s_pair_cap;
        std::size_t pos = 0;
        while (pos <= s_sizes.size()) {
            const auto next = s_sizes.find(',', pos);
            const std::string tok = s_sizes.substr(pos, next == std::string::npos ? next : next - pos);
            if (!tok.empty()) spec.sizes.push_back(std::stoll(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        const auto result = lattix::run_sweep(spec);
        emit(s_json_path.empty() ? "-" : s_json_path, lattix::emit_report(result, "json"));
        if (!s_csv_path.empty()) emit(s_csv_path, lattix::emit_report(result, "csv"));
        if (!s_svg_path.empty()) emit(s_svg_path, lattix::emit_report(result, "svg-loglog"));
        return 0;
    }

    return 0;
}

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help and friends
        std::cerr << error_json("invalid-argument", e.what()).dump() << "\n";
        return 1;
    } catch (const lattix::resource_limit_error& e) {
        std::cerr << error_json("resource-limit", e.what()).dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << error_json("invalid-argument", e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump() << "\n";
        return 1;
    }
}
