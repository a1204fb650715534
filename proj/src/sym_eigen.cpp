#include "specbound/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specbound/errors.hpp"

namespace specbound {

namespace {

// block size below which forking threads costs more than the row work saves
constexpr int kParallelCutoff = 300;

inline double sign_like(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

}  // namespace

void householder_tridiagonalize(std::vector<double>& a, int n,
                                std::vector<double>& diag,
                                std::vector<double>& offdiag,
                                bool parallel) {
    diag.assign(n, 0.0);
    offdiag.assign(n > 1 ? n - 1 : 0, 0.0);
    if (n == 1) {
        diag[0] = a[0];
        return;
    }
    auto row = [&](int i) { return a.data() + static_cast<std::size_t>(i) * n; };
    std::vector<double> w(n, 0.0);  // A*u scratch, then the rank-2 vector
#ifdef _OPENMP
    const int max_threads = parallel ? omp_get_max_threads() : 1;
    std::vector<double> thread_acc(
        max_threads > 1 ? static_cast<std::size_t>(max_threads) * n : 0, 0.0);
#endif

    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            double* ai = row(i);
            for (int k = 0; k <= l; ++k) scale += std::fabs(ai[k]);
            if (scale == 0.0) {
                offdiag[l] = ai[l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    ai[k] /= scale;
                    h += ai[k] * ai[k];
                }
                double f = ai[l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                offdiag[l] = scale * g;
                h -= f * g;
                ai[l] = f - g;

                // w = A*u over the leading (l+1) block. Only the lower
                // triangle is current, so the upper contributions are folded
                // in row by row to keep every access contiguous.
                const int l1 = l + 1;
                double* wp = w.data();
                std::fill(wp, wp + l1, 0.0);
#ifdef _OPENMP
                if (parallel && l >= kParallelCutoff && max_threads > 1) {
#pragma omp parallel
                    {
                        double* buf =
                            thread_acc.data() +
                            static_cast<std::size_t>(omp_get_thread_num()) * n;
                        std::fill(buf, buf + l1, 0.0);
#pragma omp for schedule(static, 32) nowait
                        for (int j = 0; j <= l; ++j) {
                            const double* aj = row(j);
                            const double uj = ai[j];
                            double acc = aj[j] * uj;
                            for (int k = 0; k < j; ++k) {
                                acc += aj[k] * ai[k];
                                buf[k] += aj[k] * uj;
                            }
                            buf[j] += acc;
                        }
#pragma omp barrier
#pragma omp for schedule(static)
                        for (int k = 0; k < l1; ++k) {
                            double s = 0.0;
                            for (int t = 0; t < max_threads; ++t)
                                s += thread_acc[static_cast<std::size_t>(t) * n + k];
                            wp[k] = s;
                        }
                    }
                } else
#endif
                {
                    for (int j = 0; j <= l; ++j) {
                        const double* aj = row(j);
                        const double uj = ai[j];
                        double acc = aj[j] * uj;
                        for (int k = 0; k < j; ++k) {
                            acc += aj[k] * ai[k];
                            wp[k] += aj[k] * uj;
                        }
                        wp[j] += acc;
                    }
                }
                double f2 = 0.0;
                for (int j = 0; j <= l; ++j) {
                    w[j] /= h;
                    f2 += w[j] * ai[j];
                }
                double hh = f2 / (h + h);
                for (int j = 0; j <= l; ++j) w[j] -= hh * ai[j];

                // rank-2 update A -= u w^T + w u^T on the leading block
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 32) if (parallel && l >= kParallelCutoff)
#endif
                for (int j = 0; j <= l; ++j) {
                    double fj = ai[j];
                    double gj = w[j];
                    double* aj = row(j);
                    for (int k = 0; k <= j; ++k) aj[k] -= fj * w[k] + gj * ai[k];
                }
            }
        } else {
            offdiag[l] = row(i)[l];
        }
        
    }
    for (int i = 0; i < n; ++i) diag[i] = row(i)[i];
}

void ql_implicit_shift(std::vector<double>& diag, std::vector<double>& offdiag,
                       int max_sweeps) {
    const int n = static_cast<int>(diag.size());
    if (n <= 1) return;
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<double> e(offdiag);
    e.push_back(0.0);  // e[i] couples d[i] and d[i+1]; e[n-1] is a sentinel

    // couplings below eps * ||T|| are negligible even where the neighboring
    // diagonal entries vanish (bipartite spectra have many exact zeros)
    double anorm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = std::fabs(diag[i]) + std::fabs(e[i]);
        if (i > 0) row += std::fabs(e[i - 1]);
        anorm = std::max(anorm, row);
    }
    const double tiny = eps * anorm;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(diag[m]) + std::fabs(diag[m + 1]);
                if (std::fabs(e[m]) <= eps * dd + tiny) break;
            }
            if (m != l) {
                if (iter++ == max_sweeps)
                    throw NoConverge("QL sweep limit hit at eigenvalue " +
                                     std::to_string(l));
                double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + e[l] / (g + sign_like(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                diag[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          bool parallel) {
    std::vector<double> d, e;
    householder_tridiagonalize(a, n, d, e, parallel);
    ql_implicit_shift(d, e);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    for (int sweep = 1; sweep <= 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off += std::fabs(at(p, q));
        if (off == 0.0) break;
        double tresh = sweep < 4 ? 0.2 * off / (n * n) : 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double g = 100.0 * std::fabs(at(p, q));
                if (sweep > 4 && std::fabs(at(p, p)) + g == std::fabs(at(p, p)) &&
                    std::fabs(at(q, q)) + g == std::fabs(at(q, q))) {
                    at(p, q) = 0.0;
                } else if (std::fabs(at(p, q)) > tresh) {
                    double h = at(q, q) - at(p, p);
                    double t;
                    if (std::fabs(h) + g == std::fabs(h)) {
                        t = at(p, q) / h;
                    } else {
                        double theta = 0.5 * h / at(p, q);
                        t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    double c = 1.0 / std::sqrt(1.0 + t * t);
                    double s = t * c;
                    double tau = s / (1.0 + c);
                    double hpq = t * at(p, q);
                    at(p, p) -= hpq;
                    at(q, q) += hpq;
                    at(p, q) = 0.0;
                    auto rotate = [&](int i, int j, int k, int l) {
                        double gij = at(i, j), hkl = at(k, l);
                        at(i, j) = gij - s * (hkl + gij * tau);
                        at(k, l) = hkl + s * (gij - hkl * tau);
                    };
                    for (int j = 0; j < p; ++j) rotate(j, p, j, q);
                    for (int j = p + 1; j < q; ++j) rotate(p, j, j, q);
                    for (int j = q + 1; j < n; ++j) rotate(p, j, q, j);
                }
            }
        }
    }
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = at(i, i);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

}  // namespace specbound
