#pragma once

#include <utility>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/penergy.hpp"
#include "specbound/spectrum.hpp"

namespace specbound {

struct OptimizerConfig {
    double p_max = 200.0;
    int grid_points = 2048;
    int refine_iters = 80;
    bool emit_curve = false;

    void validate() const;  // throws BadParams
};

// Consolidated lower bounds for one graph. p_best is +infinity when the
// Hoffman value beats every finite sample by more than 1e-12.
struct BoundReport {
    double hoffman = 0.0;        // 1 + lambda_1 / -lambda_n
    double inertia_bound = 0.0;  // 1 + max{n+/n-, n-/n+}
    double ando_lin = 0.0;       // 1 + max{E2+/E2-, E2-/E2+}
    double sum_bound = 0.0;      // partial-sum comparator
    double f_best = 0.0;
    double p_best = 0.0;
    std::vector<std::pair<double, double>> curve;  // (p, f) samples if requested
};

double hoffman_bound(const Spectrum& s);
double inertia_bound(const Spectrum& s);

// Linear-domain p = 2 bound; deliberately a separate code path from
// spectral_bound(s, 2) so the two can cross-check each other.
double ando_lin_bound(const Spectrum& s);

// 1 + max over m of (sum of m largest) / -(sum of m smallest), the m range
// truncated where the denominator stops being positive.
double sum_bound(const Spectrum& s);

// f(p) = 1 + energy_ratio(s, p); p = +infinity gives the Hoffman bound.
double spectral_bound(const Spectrum& s, double p);

struct OptimizeResult {
    double p_best = 0.0;
    double f_best = 0.0;
    std::vector<std::pair<double, double>> curve;
};

// Evaluates f on {0} + geometric grid on (1e-3, 1) + {1} + geometric grid on
// (1, p_max] (p = 2 always included) + {infinity}, then golden-section
// refinement around the best finite grid point. Deterministic for fixed cfg.
OptimizeResult optimize_bound(const Spectrum& s, const OptimizerConfig& cfg);

BoundReport bound_report(const Spectrum& s, const OptimizerConfig& cfg = {});
BoundReport bound_report(const Graph& g, const OptimizerConfig& cfg = {},
                         int n_max = kDefaultEigenMaxN);

}  // namespace specbound
