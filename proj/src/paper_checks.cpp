#include "specbound/paper_checks.hpp"

#include <cmath>
#include <limits>

#include "specbound/bounds.hpp"
#include "specbound/exact.hpp"
#include "specbound/named_graphs.hpp"
#include "specbound/report_io.hpp"
#include "specbound/spectrum.hpp"

namespace specbound {

const std::array<double, 12>& tilley_expected_spectrum() {
    // closed forms: roots of x^4-3x^3-13x^2+13x+30, 1+-sqrt(2), +-sqrt(5),
    // -1 (x3), -2
    static const std::array<double, 12> vals = {
        4.86272039608828,   2.41421356237309,  2.23606797749979,
        1.90542414288048,   -0.414213562373095, -1.0,
        -1.0,               -1.0,              -1.32556866523672,
        -2.0,               -2.23606797749979, -2.44257587373204};
    return vals;
}

const std::array<double, 7>& h2_expected_spectrum() {
    static const std::array<double, 7> vals = {
        3.38895928710596, 1.33154980565794,  0.0, -0.638678076600295,
        -1.0,             -1.0,              -2.0818310161636};
    return vals;
}

bool spectrum_matches(const Graph& g, std::span<const double> expected,
                      double tol, std::string* detail) {
    Spectrum s = spectrum(g);
    if (s.values.size() != expected.size()) {
        if (detail) *detail = "size mismatch";
        return false;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        worst = std::max(worst, std::fabs(s.values[i] - expected[i]));
    if (detail) *detail = "max eigenvalue error " + fmt_double(worst);
    return worst <= tol;
}

namespace {

PaperCheck make(const std::string& name, bool passed, const std::string& detail) {
    return {name, passed, detail};
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

std::vector<PaperCheck> run_paper_checks() {
    std::vector<PaperCheck> out;

    const Graph tilley = named_graph("tilley");
    const Graph h2 = named_graph("h2");
    const Spectrum ts = spectrum(tilley);
    const Spectrum hs = spectrum(h2);

    {
        std::string detail;
        bool ok = spectrum_matches(tilley, tilley_expected_spectrum(), 1e-4, &detail) &&
                  ts.n_pos == 4 && ts.n_zero == 0 && ts.n_neg == 8;
        out.push_back(make("tilley_spectrum", ok,
                           detail + ", inertia (" + std::to_string(ts.n_pos) + "," +
                               std::to_string(ts.n_zero) + "," +
                               std::to_string(ts.n_neg) + ")"));
    }
    {
        double v = hoffman_bound(ts);
        out.push_back(make("tilley_hoffman", close(v, 2.99082, 1e-4),
                           "hoffman = " + fmt_double(v) + ", expected 2.99082"));
    }
    {
        double v = sum_bound(ts);
        bool ok = close(v, 2.99082, 1e-4) && close(v, hoffman_bound(ts), 1e-9);
        out.push_back(make("tilley_sum_bound", ok,
                           "sum_bound = " + fmt_double(v) +
                               ", expected to equal the Hoffman value 2.99082"));
    }
    {
        double v = spectral_bound(ts, 13.3466);
        out.push_back(make("tilley_f_at_13.3466", close(v, 3.05114, 1e-4),
                           "f(13.3466) = " + fmt_double(v) + ", expected 3.05114"));
    }
    {
        int chi = chromatic_number(tilley);
        int omega = clique_number(tilley);
        out.push_back(make("tilley_chi_omega", chi == 4 && omega == 3,
                           "chi = " + std::to_string(chi) +
                               ", omega = " + std::to_string(omega) +
                               ", expected 4 and 3"));
    }
    {
        BoundReport r = bound_report(ts, {});
        auto q = conclude_quantum(tilley, r);
        bool ok = q.has_value() && *q == 4 && r.f_best > 3.0511 && r.f_best < 3.0512;
        out.push_back(make("tilley_quantum_chromatic", ok,
                           "f_best = " + fmt_double(r.f_best) + ", chi_q = " +
                               (q ? std::to_string(*q) : std::string("none")) +
                               ", expected 4"));
    }
    {
        std::string detail;
        bool ok = spectrum_matches(h2, h2_expected_spectrum(), 1e-4, &detail) &&
                  hs.n_pos == 2 && hs.n_zero == 1 && hs.n_neg == 4;
        out.push_back(make("h2_spectrum", ok, detail));
    }
    {
        double v = inertia_bound(hs);
        out.push_back(make("h2_inertia_bound", close(v, 3.0, 1e-12),
                           "inertia bound = " + fmt_double(v) + ", expected 3"));
    }
    {
        double v = spectral_bound(hs, 0.562125);
        out.push_back(make("h2_f_at_0.562125", close(v, 3.0064, 1e-3),
                           "f(0.562125) = " + fmt_double(v) + ", expected 3.0064"));
    }
    {
        Spectrum s = spectrum(named_graph("gq_2_4"));
        OptimizeResult r = optimize_bound(s, {});
        bool ok = close(inertia_bound(s), 4.5, 1e-6) && close(r.f_best, 4.5, 1e-6) &&
                  r.p_best == 0.0;
        out.push_back(make("gq_2_4_inertia_optimal", ok,
                           "f_best = " + fmt_double(r.f_best) + " at p = " +
                               fmt_double(r.p_best) + ", expected 4.5 at p = 0"));
    }
    {
        Spectrum s = spectrum(named_graph("gq_2_1"));
        OptimizeResult r = optimize_bound(s, {});
        bool ok = close(hoffman_bound(s), 3.0, 1e-6) && close(r.f_best, 3.0, 1e-6) &&
                  std::isinf(r.p_best);
        out.push_back(make("gq_2_1_hoffman_optimal", ok,
                           "f_best = " + fmt_double(r.f_best) + " at p = " +
                               fmt_double(r.p_best) + ", expected 3 at p = inf"));
    }
    {
        bool ok = true;
        double worst = 0.0;
        const double ps[] = {0.0, 0.5, 1.0, 2.0, 7.0,
                             std::numeric_limits<double>::infinity()};
        for (long r = 2; r <= 4; ++r) {
            for (long n = 1; n <= 3; ++n) {
                Spectrum s = spectrum(named_graph("turan", {n, r}));
                for (double p : ps) {
                    double err = std::fabs(spectral_bound(s, p) - r);
                    worst = std::max(worst, err);
                    if (err > 1e-9) ok = false;
                }
            }
        }
        out.push_back(make("turan_tightness", ok,
                           "max |f(p) - r| = " + fmt_double(worst) +
                               " over r in 2..4, n in 1..3"));
    }

    return out;
}

}  // namespace specbound
