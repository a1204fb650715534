#pragma once

#include "specbound/spectrum.hpp"

namespace specbound {

// Signed p-energies in the log domain. Exponents beyond ~400 overflow
// lambda^p in doubles, so everything downstream works with logs.
struct PEnergyPair {
    double p;
    double log_pos;  // ln sum_{lambda > tau} lambda^p
    double log_neg;  // ln sum_{lambda < -tau} |lambda|^p
};

// Taylor coefficients of the signed energies at p = 1; exp|alpha_pos -
// alpha_neg| is the p -> 1 limit of the energy ratio.
struct LimitCoefficients {
    double alpha_pos;  // sum lambda ln(lambda) / E1+ over positive eigenvalues
    double alpha_neg;  // sum |lambda| ln|lambda| / E1- over negative ones
};

// p = 0 uses the inertia counts directly, never lambda^0 of a near-zero
// eigenvalue. Throws NegativeP for p < 0 and EmptyGraph when either sign
// class is empty (edgeless graph).
PEnergyPair p_energy(const Spectrum& s, double p);

LimitCoefficients limit_coefficients(const Spectrum& s);

// Width of the band around p = 1 where the closed-form limit replaces the
// ratio formula; 1/|p-1| amplifies rounding inside the band.
inline constexpr double kLimitBand = 1e-6;

// H(p) = max{E+/E-, E-/E+}^(1/|p-1|), by the limit formula inside the band.
double energy_ratio(const Spectrum& s, double p);

}  // namespace specbound
