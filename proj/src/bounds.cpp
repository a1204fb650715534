#include "specbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_signed(const Spectrum& s) {
    if (s.n_pos == 0 || s.n_neg == 0)
        throw EmptyGraph("graph has no edge, so no signed eigenvalue pair");
}

}  // namespace

void OptimizerConfig::validate() const {
    if (!(p_max >= 4.0)) throw BadParams("optimizer: p_max must be >= 4");
    if (grid_points < 64) throw BadParams("optimizer: grid_points must be >= 64");
    if (refine_iters < 0) throw BadParams("optimizer: refine_iters must be >= 0");
}

double hoffman_bound(const Spectrum& s) {
    require_signed(s);
    return 1.0 + s.lambda_max() / -s.lambda_min();
}

double inertia_bound(const Spectrum& s) {
    require_signed(s);
    double a = static_cast<double>(s.n_pos) / s.n_neg;
    double b = static_cast<double>(s.n_neg) / s.n_pos;
    return 1.0 + std::max(a, b);
}

double ando_lin_bound(const Spectrum& s) {
    require_signed(s);
    double pos = 0.0, neg = 0.0;
    for (int i = 0; i < s.n_pos; ++i) pos += s.values[i] * s.values[i];
    for (int i = s.n() - s.n_neg; i < s.n(); ++i) neg += s.values[i] * s.values[i];
    return 1.0 + std::max(pos / neg, neg / pos);
}

double sum_bound(const Spectrum& s) {
    require_signed(s);
    const int n = s.n();
    double best = 0.0, num = 0.0, den = 0.0;
    for (int m = 1; m <= n - 1; ++m) {
        num += s.values[m - 1];
        den -= s.values[n - m];
        if (den <= 0.0) break;
        best = std::max(best, num / den);
    }
    return 1.0 + best;
}

double spectral_bound(const Spectrum& s, double p) {
    if (std::isinf(p)) return hoffman_bound(s);
    return 1.0 + energy_ratio(s, p);
}

OptimizeResult optimize_bound(const Spectrum& s, const OptimizerConfig& cfg) {
    cfg.validate();
    require_signed(s);

    std::vector<double> ps;
    ps.reserve(cfg.grid_points + 4);
    ps.push_back(0.0);
    int k1 = cfg.grid_points / 2;
    int k2 = cfg.grid_points - k1;
    for (int i = 0; i < k1; ++i)
        ps.push_back(1e-3 * std::pow(1e3, static_cast<double>(i) / k1));
    ps.push_back(1.0);
    for (int j = 1; j <= k2; ++j)
        ps.push_back(std::pow(cfg.p_max, static_cast<double>(j) / k2));
    ps.push_back(2.0);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    OptimizeResult res;
    if (cfg.emit_curve) res.curve.reserve(ps.size());

    std::size_t best_idx = 0;
    double best_f = -kInf, best_p = 0.0;
    auto consider = [&](double p, double f) {
        if (f > best_f) {
            best_f = f;
            best_p = p;
        }
    };
    for (std::size_t i = 0; i < ps.size(); ++i) {
        double f = spectral_bound(s, ps[i]);
        if (cfg.emit_curve) res.curve.emplace_back(ps[i], f);
        if (f > best_f) best_idx = i;
        consider(ps[i], f);
    }

    // golden-section refinement inside the bracket around the best sample
    if (cfg.refine_iters > 0) {
        double a = best_idx > 0 ? ps[best_idx - 1] : ps[best_idx];
        double b = best_idx + 1 < ps.size() ? ps[best_idx + 1] : ps[best_idx];
        if (b > a) {
            constexpr double invphi = 0.6180339887498949;
            double x1 = b - invphi * (b - a);
            double x2 = a + invphi * (b - a);
            double f1 = spectral_bound(s, x1);
            double f2 = spectral_bound(s, x2);
            consider(x1, f1);
            consider(x2, f2);
            for (int it = 0; it < cfg.refine_iters; ++it) {
                if (f1 < f2) {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + invphi * (b - a);
                    f2 = spectral_bound(s, x2);
                    consider(x2, f2);
                } else {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - invphi * (b - a);
                    f1 = spectral_bound(s, x1);
                    consider(x1, f1);
                }
            }
        }
    }

    double hoffman = hoffman_bound(s);
    if (hoffman > best_f + 1e-12) {
        res.p_best = kInf;
        res.f_best = hoffman;
    } else {
        res.p_best = best_p;
        res.f_best = best_f;
    }
    return res;
}

BoundReport bound_report(const Spectrum& s, const OptimizerConfig& cfg) {
    BoundReport r;
    r.hoffman = hoffman_bound(s);
    r.inertia_bound = inertia_bound(s);
    r.ando_lin = ando_lin_bound(s);
    r.sum_bound = sum_bound(s);
    OptimizeResult opt = optimize_bound(s, cfg);
    r.f_best = opt.f_best;
    r.p_best = opt.p_best;
    r.curve = std::move(opt.curve);
    return r;
}

BoundReport bound_report(const Graph& g, const OptimizerConfig& cfg, int n_max) {
    return bound_report(spectrum(g, n_max), cfg);
}

}  // namespace specbound
