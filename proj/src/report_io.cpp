#include "specbound/report_io.hpp"

#include <cmath>
#include <cstdio>

#include "specbound/errors.hpp"

namespace specbound {

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::kText;
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    throw BadParams("unknown format: " + std::string(name));
}

std::string fmt_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

namespace {

std::string json_number_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    return fmt_double(v);
}

void append_curve_json(std::string& out, const BoundReport& r) {
    if (r.curve.empty()) return;
    out += ",\"curve\":[";
    bool first = true;
    for (auto [p, f] : r.curve) {
        if (!first) out.push_back(',');
        first = false;
        out += "[" + fmt_double(p) + "," + fmt_double(f) + "]";
    }
    out += "]";
}

}  // namespace

std::string bound_report_text(const std::string& label, int n, int m,
                              const BoundReport& r, const ExactInfo& info) {
    std::string out;
    out += "graph      " + label + "  (n=" + std::to_string(n) +
           ", m=" + std::to_string(m) + ")\n";
    out += "hoffman    " + fmt_double(r.hoffman) + "\n";
    out += "inertia    " + fmt_double(r.inertia_bound) + "\n";
    out += "ando_lin   " + fmt_double(r.ando_lin) + "\n";
    out += "sum_bound  " + fmt_double(r.sum_bound) + "\n";
    out += "f_best     " + fmt_double(r.f_best) + "\n";
    out += "p_best     " + fmt_double(r.p_best) + "\n";
    if (info.chi) out += "chi        " + std::to_string(*info.chi) + "\n";
    if (info.omega) out += "omega      " + std::to_string(*info.omega) + "\n";
    if (info.chi_q)
        out += "chi_q      " + std::to_string(*info.chi_q) + "  (certified)\n";
    for (auto [p, f] : r.curve)
        out += "curve      " + fmt_double(p) + " " + fmt_double(f) + "\n";
    return out;
}

std::string bound_report_json(const std::string& label, int n, int m,
                              const BoundReport& r, const ExactInfo& info) {
    std::string out = "{\"graph\":\"" + json_escape(label) + "\"";
    out += ",\"n\":" + std::to_string(n);
    out += ",\"m\":" + std::to_string(m);
    out += ",\"hoffman\":" + fmt_double(r.hoffman);
    out += ",\"inertia_bound\":" + fmt_double(r.inertia_bound);
    out += ",\"ando_lin\":" + fmt_double(r.ando_lin);
    out += ",\"sum_bound\":" + fmt_double(r.sum_bound);
    out += ",\"p_best\":" + json_number_or_inf(r.p_best);
    out += ",\"f_best\":" + fmt_double(r.f_best);
    if (info.chi) out += ",\"chi\":" + std::to_string(*info.chi);
    if (info.omega) out += ",\"omega\":" + std::to_string(*info.omega);
    if (info.chi_q) out += ",\"chi_q\":" + std::to_string(*info.chi_q);
    append_curve_json(out, r);
    out += "}";
    return out;
}

std::string bound_report_csv(const std::string& label, int n, int m,
                             const BoundReport& r, const ExactInfo& info) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    out += label + "," + std::to_string(n) + "," + std::to_string(m) + ",";
    out += fmt_double(r.hoffman) + "," + fmt_double(r.inertia_bound) + "," +
           fmt_double(r.ando_lin) + "," + fmt_double(r.sum_bound) + "," +
           fmt_double(r.p_best) + "," + fmt_double(r.f_best) + ",";
    if (info.chi) out += std::to_string(*info.chi);
    out.push_back(',');
    if (info.omega) out += std::to_string(*info.omega);
    out += ",\n";
    return out;
}

}  // namespace specbound
