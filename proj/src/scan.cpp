#include "specbound/scan.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "specbound/errors.hpp"
#include "specbound/exact.hpp"
#include "specbound/penergy.hpp"

namespace specbound {

std::string_view check_name(Check c) {
    switch (c) {
        case Check::kSoundness: return "SOUNDNESS";
        case Check::kConj52: return "CONJ_5_2";
        case Check::kProp52: return "PROP_5_2";
        case Check::kThm53: return "THM_5_3";
    }
    return "?";
}

Check parse_check(std::string_view name) {
    if (name == "soundness" || name == "SOUNDNESS") return Check::kSoundness;
    if (name == "conj52" || name == "CONJ_5_2") return Check::kConj52;
    if (name == "prop52" || name == "PROP_5_2") return Check::kProp52;
    if (name == "thm53" || name == "THM_5_3") return Check::kThm53;
    throw BadParams("unknown check: " + std::string(name));
}

namespace {

bool enabled(const ScanOptions& o, Check c) {
    return std::find(o.checks.begin(), o.checks.end(), c) != o.checks.end();
}

// inequality slack: lhs >= rhs is accepted within 1e-9 relative to rhs
bool holds(double lhs, double rhs) { return lhs >= rhs - 1e-9 * std::max(1.0, rhs); }
bool tight(double lhs, double rhs) {
    return std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs);
}

void run_checks(ScanRecord& rec, const Graph& g, const Spectrum& s,
                const ScanOptions& opts) {
    bool connected = g.is_connected();
    const double nm1 = g.num_vertices() - 1;
    const double m = g.num_edges();

    bool conj_bad = false, prop_bad = false, thm_bad = false;
    bool thm_all_tight = true;
    int thm_samples = 0;

    for (double p : opts.check_ps) {
        if (p < 0.0 || p > 2.0) continue;
        PEnergyPair e = p_energy(s, p);
        double epos = std::exp(e.log_pos), eneg = std::exp(e.log_neg);
        double floor_n = std::pow(nm1, p / 2.0);

        if (p > 0.0 && p < 1.0) {
            if (enabled(opts, Check::kProp52) && !holds(epos + eneg, 2.0 * std::pow(m, p / 2.0)))
                prop_bad = true;
            if (enabled(opts, Check::kThm53) && connected) {
                ++thm_samples;
                if (!holds(std::min(epos, eneg), floor_n)) thm_bad = true;
                if (!tight(std::min(epos, eneg), floor_n)) thm_all_tight = false;
            }
        }
        if (enabled(opts, Check::kConj52) && connected &&
            !holds(std::min(epos, eneg), floor_n))
            conj_bad = true;
    }

    if (enabled(opts, Check::kSoundness) && rec.chi &&
        std::ceil(rec.bounds.f_best - 1e-9) > *rec.chi)
        rec.violations.push_back(Check::kSoundness);
    if (conj_bad) rec.violations.push_back(Check::kConj52);
    if (prop_bad) rec.violations.push_back(Check::kProp52);
    if (thm_bad) rec.violations.push_back(Check::kThm53);
    if (enabled(opts, Check::kThm53) && connected && thm_samples > 0)
        rec.thm53_equality = thm_all_tight;
}

}  // namespace

ScanRecord scan_line(std::string_view line, long id, const ScanOptions& opts) {
    ScanRecord rec;
    rec.id = id;

    Graph g(1, {});
    try {
        g = parse_graph6(line, opts.parse_max_n);
    } catch (const Overflow& e) {
        rec.error = "Overflow";
        rec.size_limited = true;
        return rec;
    } catch (const UnsupportedFormat&) {
        rec.error = "UnsupportedFormat";
        rec.malformed = true;
        return rec;
    } catch (const Error&) {
        rec.error = "MalformedGraph6";
        rec.malformed = true;
        return rec;
    }

    rec.n = g.num_vertices();
    rec.m = g.num_edges();

    try {
        Spectrum s = spectrum(g, opts.eigen_max_n);
        OptimizerConfig cfg = opts.opt;
        cfg.emit_curve = false;
        rec.bounds = bound_report(s, cfg);
        rec.has_bounds = true;

        bool want_chi = opts.exact || enabled(opts, Check::kSoundness);
        if (want_chi && rec.n <= opts.exact_cap) {
            rec.chi = chromatic_number(g, opts.exact_cap);
            if (opts.exact) rec.omega = clique_number(g, opts.exact_cap);
        }
        if (!opts.checks.empty()) run_checks(rec, g, s, opts);
    } catch (const EmptyGraph&) {
        rec.error = "EmptyGraph";
    } catch (const TooLarge&) {
        rec.error = "TooLarge";
        rec.size_limited = true;
    }
    return rec;
}

namespace {

std::string flags_field(const ScanRecord& rec) {
    std::string out;
    if (!rec.error.empty()) out = "ERROR:" + rec.error;
    for (Check c : rec.violations) {
        if (!out.empty()) out.push_back(';');
        out += check_name(c);
    }
    return out;
}

}  // namespace

std::string scan_record_csv(const ScanRecord& rec) {
    std::string out = std::to_string(rec.id);
    out.push_back(',');
    if (rec.m >= 0) out += std::to_string(rec.n);
    out.push_back(',');
    if (rec.m >= 0) out += std::to_string(rec.m);
    out.push_back(',');
    if (rec.has_bounds) {
        const BoundReport& b = rec.bounds;
        out += fmt_double(b.hoffman) + "," + fmt_double(b.inertia_bound) + "," +
               fmt_double(b.ando_lin) + "," + fmt_double(b.sum_bound) + "," +
               fmt_double(b.p_best) + "," + fmt_double(b.f_best) + ",";
    } else {
        out += ",,,,,,";
    }
    if (rec.chi) out += std::to_string(*rec.chi);
    out.push_back(',');
    if (rec.omega) out += std::to_string(*rec.omega);
    out.push_back(',');
    out += flags_field(rec);
    return out;
}

std::string scan_record_json(const ScanRecord& rec) {
    std::string out = "{\"id\":" + std::to_string(rec.id);
    if (!rec.error.empty()) out += ",\"error\":\"" + rec.error + "\"";
    if (rec.m >= 0) {
        out += ",\"n\":" + std::to_string(rec.n);
        out += ",\"m\":" + std::to_string(rec.m);
    }
    if (rec.has_bounds) {
        const BoundReport& b = rec.bounds;
        out += ",\"hoffman\":" + fmt_double(b.hoffman);
        out += ",\"inertia_bound\":" + fmt_double(b.inertia_bound);
        out += ",\"ando_lin\":" + fmt_double(b.ando_lin);
        out += ",\"sum_bound\":" + fmt_double(b.sum_bound);
        out += std::string(",\"p_best\":") +
               (std::isinf(b.p_best) ? "\"inf\"" : fmt_double(b.p_best));
        out += ",\"f_best\":" + fmt_double(b.f_best);
    }
    if (rec.chi) out += ",\"chi\":" + std::to_string(*rec.chi);
    if (rec.omega) out += ",\"omega\":" + std::to_string(*rec.omega);
    out += ",\"flags\":[";
    for (std::size_t i = 0; i < rec.violations.size(); ++i) {
        if (i) out.push_back(',');
        out += "\"" + std::string(check_name(rec.violations[i])) + "\"";
    }
    out += "]";
    if (rec.thm53_equality)
        out += std::string(",\"thm53_equality\":") +
               (*rec.thm53_equality ? "true" : "false");
    out += "}";
    return out;
}

int ScanSummary::exit_code() const {
    if (malformed > 0) return 2;
    if (size_limited > 0) return 3;
    if (violating_records > 0) return 1;
    return 0;
}

ScanSummary scan_stream(std::istream& in, std::ostream& out, OutputFormat format,
                        const ScanOptions& opts) {
    if (format == OutputFormat::kText)
        throw BadParams("scan emits csv or json records");
    opts.opt.validate();

    ScanSummary sum;
    if (format == OutputFormat::kCsv) out << kCsvHeader << '\n';

    constexpr std::size_t kBatch = 256;
    std::vector<std::string> lines;
    lines.reserve(kBatch);
    long next_id = 1;
    bool more = true;
    while (more) {
        lines.clear();
        std::string line;
        while (lines.size() < kBatch && std::getline(in, line)) lines.push_back(line);
        more = lines.size() == kBatch;
        if (lines.empty()) break;

        std::vector<ScanRecord> recs(lines.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t i = 0; i < lines.size(); ++i)
            recs[i] = scan_line(lines[i], next_id + static_cast<long>(i), opts);
        next_id += static_cast<long>(lines.size());

        for (const ScanRecord& rec : recs) {
            ++sum.lines;
            if (rec.malformed) ++sum.malformed;
            if (rec.size_limited) ++sum.size_limited;
            if (!rec.error.empty()) ++sum.error_records;
            if (!rec.violations.empty()) ++sum.violating_records;
            out << (format == OutputFormat::kCsv ? scan_record_csv(rec)
                                                 : scan_record_json(rec))
                << '\n';
        }
    }
    return sum;
}

}  // namespace specbound
