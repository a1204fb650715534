#include "specbound/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "specbound/bounds.hpp"
#include "specbound/edgelist.hpp"
#include "specbound/errors.hpp"
#include "specbound/exact.hpp"
#include "specbound/graph6.hpp"
#include "specbound/named_graphs.hpp"
#include "specbound/paper_checks.hpp"
#include "specbound/report_io.hpp"
#include "specbound/scan.hpp"

namespace specbound {

namespace {

struct GraphSource {
    std::string g6;
    std::string edgelist_path;
    std::string named;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--g6", g6, "graph6 string");
        cmd->add_option("--edgelist", edgelist_path, "edge-list file, - for stdin");
        cmd->add_option("--named", named, "named graph, e.g. tilley or turan:2,3");
    }

    std::pair<Graph, std::string> load(std::istream& in, std::int64_t max_n) const {
        int given = !g6.empty() + !edgelist_path.empty() + !named.empty();
        if (given != 1)
            throw BadParams("give exactly one of --g6, --edgelist, --named");
        if (!g6.empty()) return {parse_graph6(g6, max_n), g6};
        if (!edgelist_path.empty()) {
            std::string text;
            if (edgelist_path == "-") {
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            } else {
                std::ifstream f(edgelist_path);
                if (!f) throw ParseError("cannot open " + edgelist_path);
                std::ostringstream ss;
                ss << f.rdbuf();
                text = ss.str();
            }
            return {parse_edgelist(text), edgelist_path};
        }
        auto colon = named.find(':');
        std::string name = named.substr(0, colon);
        std::vector<long> params;
        if (colon != std::string::npos) {
            std::string rest = named.substr(colon + 1);
            std::stringstream ss(rest);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    params.push_back(std::stol(tok));
                } catch (const std::exception&) {
                    throw BadParams("bad parameter in --named: " + tok);
                }
            }
        }
        return {named_graph(name, params), named};
    }
};

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw BadParams("bad number in list: " + tok);
        }
    }
    return out;
}

struct CurveRange {
    double lo = 0.0, hi = 0.0;
    long steps = 0;
};

CurveRange parse_curve_range(const std::string& spec) {
    CurveRange r;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%ld", &r.lo, &r.hi, &r.steps) != 3)
        throw BadParams("expected lo:hi:steps, got " + spec);
    return r;
}

std::vector<std::pair<double, double>> sample_curve(const Spectrum& s, double lo,
                                                    double hi, long steps) {
    if (!(lo >= 0.0) || !(hi > lo) || steps < 2)
        throw BadParams("curve needs 0 <= lo < hi and steps >= 2");
    std::vector<std::pair<double, double>> rows;
    rows.reserve(steps);
    for (long i = 0; i < steps; ++i) {
        double p = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
        rows.emplace_back(p, spectral_bound(s, p));
    }
    return rows;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const Overflow*>(&e) || dynamic_cast<const TooLarge*>(&e))
        return 3;
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"spectral chromatic-number lower bounds from signed p-energies"};
    app.require_subcommand(1);

    GraphSource src;
    OptimizerConfig cfg;
    std::string format = "text";
    std::string checks_arg;
    std::string check_grid_arg;
    std::string curve_range_arg;
    bool exact = false;
    int n_max = kDefaultEigenMaxN;
    int exact_cap = kDefaultExactCap;

    auto add_opt_flags = [&](CLI::App* cmd) {
        cmd->add_option("--p-max", cfg.p_max, "largest finite exponent in the grid");
        cmd->add_option("--grid", cfg.grid_points, "number of finite grid points");
        cmd->add_option("--refine", cfg.refine_iters, "golden-section iterations");
        cmd->add_option("--n-max", n_max, "dense eigensolver size limit");
    };

    CLI::App* bound = app.add_subcommand("bound", "bound report for one graph");
    src.add_flags(bound);
    add_opt_flags(bound);
    bound->add_option("--format", format, "text, csv or json");
    bound->add_flag("--exact", exact, "also compute exact chi and omega (n <= 64)");
    bound->add_option("--exact-cap", exact_cap, "vertex cap for exact search");
    bound->add_option("--curve-range", curve_range_arg,
                      "lo:hi:steps uniform f(p) samples to include");

    CLI::App* curve = app.add_subcommand("curve", "CSV of f(p) over a range");
    src.add_flags(curve);
    double p_lo = 0.0, p_hi = 0.0;
    long steps = 0;
    curve->add_option("p_lo", p_lo, "range start")->required();
    curve->add_option("p_hi", p_hi, "range end")->required();
    curve->add_option("steps", steps, "row count")->required();
    curve->add_option("--n-max", n_max, "dense eigensolver size limit");

    CLI::App* scan = app.add_subcommand("scan", "score graph6 lines from stdin");
    add_opt_flags(scan);
    std::string scan_format = "csv";
    scan->add_option("--format", scan_format, "csv or json");
    scan->add_flag("--exact", exact, "exact chi and omega per record (n <= cap)");
    scan->add_option("--exact-cap", exact_cap, "vertex cap for exact search");
    scan->add_option("--checks", checks_arg,
                     "comma list of soundness,conj52,prop52,thm53 or all");
    scan->add_option("--check-grid", check_grid_arg,
                     "comma list of exponents for the inequality checks");

    CLI::App* check_paper =
        app.add_subcommand("check-paper", "run the published-value regression table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (bound->parsed()) {
            auto [g, label] = src.load(in, n_max);
            Spectrum s = spectrum(g, n_max);
            BoundReport r = bound_report(s, cfg);
            if (!curve_range_arg.empty()) {
                CurveRange cr = parse_curve_range(curve_range_arg);
                r.curve = sample_curve(s, cr.lo, cr.hi, cr.steps);
            }
            ExactInfo info;
            if (exact && g.num_vertices() <= exact_cap) {
                info.chi = chromatic_number(g, exact_cap);
                info.omega = clique_number(g, exact_cap);
                info.chi_q = conclude_quantum(g, r, exact_cap);
            }
            switch (parse_format(format)) {
                case OutputFormat::kText:
                    out << bound_report_text(label, g.num_vertices(), g.num_edges(), r, info);
                    break;
                case OutputFormat::kJson:
                    out << bound_report_json(label, g.num_vertices(), g.num_edges(), r, info)
                        << "\n";
                    break;
                case OutputFormat::kCsv:
                    out << bound_report_csv(label, g.num_vertices(), g.num_edges(), r, info);
                    break;
            }
            return 0;
        }

        if (curve->parsed()) {
            auto [g, label] = src.load(in, n_max);
            Spectrum s = spectrum(g, n_max);
            out << "p,f\n";
            for (auto [p, f] : sample_curve(s, p_lo, p_hi, steps))
                out << fmt_double(p) << ',' << fmt_double(f) << "\n";
            return 0;
        }

        if (scan->parsed()) {
            ScanOptions opts;
            opts.opt = cfg;
            opts.exact = exact;
            opts.exact_cap = exact_cap;
            opts.eigen_max_n = n_max;
            if (checks_arg == "all") {
                opts.checks = {Check::kSoundness, Check::kConj52, Check::kProp52,
                               Check::kThm53};
            } else if (!checks_arg.empty()) {
                std::stringstream ss(checks_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) opts.checks.push_back(parse_check(tok));
            }
            if (!check_grid_arg.empty()) opts.check_ps = parse_double_list(check_grid_arg);
            ScanSummary sum = scan_stream(in, out, parse_format(scan_format), opts);
            return sum.exit_code();
        }

        if (check_paper->parsed()) {
            auto checks = run_paper_checks();
            int passed = 0;
            for (const auto& c : checks) {
                out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail
                    << "\n";
                if (c.passed) ++passed;
            }
            out << passed << "/" << checks.size() << " paper checks passed\n";
            return passed == static_cast<int>(checks.size()) ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}

}  // namespace specbound
