#pragma once

#include <vector>

namespace specbound {

// Dense symmetric eigensolver, eigenvalues only.
//
// The production path is Householder tridiagonalization followed by
// implicit-shift QL; the tridiagonalization inner loops are OpenMP-parallel
// when `parallel` is set and the build has OpenMP. jacobi_eigenvalues is an
// independent serial reference used by tests and the benchmark.

// Reduces the symmetric matrix `a` (row-major n*n, destroyed) to tridiagonal
// form: diag[0..n-1], offdiag[0..n-2].
void householder_tridiagonalize(std::vector<double>& a, int n,
                                std::vector<double>& diag,
                                std::vector<double>& offdiag,
                                bool parallel = true);

// Eigenvalues of the tridiagonal matrix, in place into diag. Throws
// NoConverge if any eigenvalue needs more than max_sweeps QL sweeps.
void ql_implicit_shift(std::vector<double>& diag, std::vector<double>& offdiag,
                       int max_sweeps = 64);

// Convenience wrapper: eigenvalues of a symmetric matrix, sorted descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          bool parallel = true);

// Serial cyclic Jacobi reference, sorted descending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

}  // namespace specbound
