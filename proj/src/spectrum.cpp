#include "specbound/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "specbound/errors.hpp"
#include "specbound/sym_eigen.hpp"

namespace specbound {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int rank_mod(std::vector<u64> m, int n, u64 p) {
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (m[static_cast<std::size_t>(r) * n + col] % p != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int c = 0; c < n; ++c)
            std::swap(m[static_cast<std::size_t>(pivot) * n + c],
                      m[static_cast<std::size_t>(rank) * n + c]);
        u64 inv = powmod(m[static_cast<std::size_t>(rank) * n + col] % p, p - 2, p);
        for (int r = rank + 1; r < n; ++r) {
            u64 f = m[static_cast<std::size_t>(r) * n + col] % p;
            if (f == 0) continue;
            f = mulmod(f, inv, p);
            for (int c = col; c < n; ++c) {
                u64& x = m[static_cast<std::size_t>(r) * n + c];
                u64 sub = mulmod(f, m[static_cast<std::size_t>(rank) * n + c] % p, p);
                u64 val = x % p;
                x = val >= sub ? val - sub : val + (p - sub);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Spectrum spectrum(const Graph& g, int n_max) {
    const int n = g.num_vertices();
    if (n > n_max)
        throw TooLarge("graph has " + std::to_string(n) + " vertices, limit " +
                       std::to_string(n_max));

    Spectrum s;
    s.values = symmetric_eigenvalues(g.adjacency_matrix(), n);

    double amax = std::max(std::fabs(s.values.front()), std::fabs(s.values.back()));
    s.tau = 64.0 * n * std::max(1.0, amax) * std::numeric_limits<double>::epsilon();
    for (double v : s.values) {
        if (v > s.tau)
            ++s.n_pos;
        else if (v < -s.tau)
            ++s.n_neg;
        else
            ++s.n_zero;
    }

    // trace and Frobenius identities hold for any adjacency matrix; a
    // violation is a solver bug
    double sum = 0.0, sq = 0.0;
    for (double v : s.values) {
        sum += v;
        sq += v * v;
    }
    double scale = std::max(1.0, amax);
    if (std::fabs(sum) > n * s.tau)
        throw std::logic_error("eigensolver trace identity violated");
    if (std::fabs(sq - 2.0 * g.num_edges()) > n * s.tau * scale)
        throw std::logic_error("eigensolver Frobenius identity violated");

    return s;
}

int exact_adjacency_rank(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 64) throw TooLarge("exact rank limited to n <= 64");

    // product of these primes is ~2^219 > 64^32, the Hadamard bound on any
    // minor of a 0/1 matrix with n <= 64, so the max modular rank is the
    // rank over Q
    static constexpr u64 primes[] = {2305843009213693951ull, 9223372036854775783ull,
                                     18446744073709551557ull, 2147483647ull};

    std::vector<u64> a(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + v] = 1;
        a[static_cast<std::size_t>(v) * n + u] = 1;
    }
    int rank = 0;
    for (u64 p : primes) rank = std::max(rank, rank_mod(a, n, p));
    return rank;
}

std::array<int, 3> inertia(const Graph& g, int n_max) {
    Spectrum s = spectrum(g, n_max);
    if (g.num_vertices() <= 64) {
        int rank = exact_adjacency_rank(g);
        if (s.n_zero != g.num_vertices() - rank)
            throw std::logic_error("inertia cross-check failed: n_zero=" +
                                   std::to_string(s.n_zero) + " but rank gives " +
                                   std::to_string(g.num_vertices() - rank));
    }
    return {s.n_pos, s.n_zero, s.n_neg};
}

}  // namespace specbound
