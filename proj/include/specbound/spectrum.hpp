#pragma once

#include <array>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

inline constexpr int kDefaultEigenMaxN = 4096;

// Adjacency spectrum plus the sign classification every bound is built on.
struct Spectrum {
    std::vector<double> values;  // descending
    int n_pos = 0;               // eigenvalues > tau
    int n_zero = 0;              // |eigenvalue| <= tau
    int n_neg = 0;               // eigenvalues < -tau
    double tau = 0.0;            // zero-classification tolerance used

    int n() const { return static_cast<int>(values.size()); }
    double lambda_max() const { return values.front(); }
    double lambda_min() const { return values.back(); }
};

// Full adjacency spectrum with inertia. tau = 64 * n * max(1, |lambda|_max)
// * machine epsilon; adjacency matrices are integral, so true zero
// eigenvalues are exact and the relative tolerance is safe. Throws TooLarge
// for n > n_max.
Spectrum spectrum(const Graph& g, int n_max = kDefaultEigenMaxN);

// Inertia triple (n_pos, n_zero, n_neg). For n <= 64 the zero count is also
// cross-checked against the exact rank of the adjacency matrix over the
// rationals; a mismatch means the tau classification failed and throws
// std::logic_error.
std::array<int, 3> inertia(const Graph& g, int n_max = kDefaultEigenMaxN);

// Exact rank of the adjacency matrix over Q, n <= 64. Computed as the
// maximum rank over a fixed set of prime moduli whose product exceeds the
// Hadamard bound n^(n/2), which makes the modular result exact.
int exact_adjacency_rank(const Graph& g);

}  // namespace specbound
