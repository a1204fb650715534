// Compares the eigensolver paths: serial Jacobi reference, Householder+QL
// single-threaded, and Householder+QL with the OpenMP kernels.
//
//   bench_eigen [n ...]    default sizes: 128 256 512 1024

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specbound/sym_eigen.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

std::vector<double> random_adjacency(int n, std::mt19937& rng) {
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) {
                a[static_cast<std::size_t>(u) * n + v] = 1.0;
                a[static_cast<std::size_t>(v) * n + u] = 1.0;
            }
    return a;
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = clock_type::now();
    f();
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes;
    for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
    if (sizes.empty()) sizes = {128, 256, 512, 1024};

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; parallel path runs serial\n");
#endif
    std::printf("%6s %12s %14s %14s %10s %10s\n", "n", "jacobi_ms", "hhql_serial_ms",
                "hhql_omp_ms", "speedup", "max_diff");

    std::mt19937 rng(1);
    for (int n : sizes) {
        auto a = random_adjacency(n, rng);
        std::vector<double> ser, par, jac;
        double t_ser = time_ms([&] { ser = specbound::symmetric_eigenvalues(a, n, false); });
        double t_par = time_ms([&] { par = specbound::symmetric_eigenvalues(a, n, true); });
        bool run_jacobi = n <= 512;  // cubic per sweep; too slow beyond this
        double t_jac = 0.0;
        if (run_jacobi)
            t_jac = time_ms([&] { jac = specbound::jacobi_eigenvalues(a, n); });
        double diff = max_diff(ser, par);
        if (run_jacobi) diff = std::max(diff, max_diff(ser, jac));
        if (run_jacobi)
            std::printf("%6d %12.2f %14.2f %14.2f %9.2fx %10.2e\n", n, t_jac, t_ser,
                        t_par, t_ser / t_par, diff);
        else
            std::printf("%6d %12s %14.2f %14.2f %9.2fx %10.2e\n", n, "-", t_ser,
                        t_par, t_ser / t_par, diff);
    }
    return 0;
}
