#pragma once

#include <optional>

#include "specbound/bounds.hpp"
#include "specbound/graph.hpp"

namespace specbound {

inline constexpr int kDefaultExactCap = 64;

// Exact chromatic number via DSATUR-ordered branch and bound, seeded with a
// greedy upper bound and a greedy clique lower bound. Deterministic
// tie-break: highest saturation, then highest degree, then lowest index.
// Throws TooLarge for n > cap.
int chromatic_number(const Graph& g, int cap = kDefaultExactCap);

// Exact clique number via branch and bound with greedy-coloring pruning.
int clique_number(const Graph& g, int cap = kDefaultExactCap);

// The certified quantum chromatic number: returns chi(g) when the spectral
// lower bound exceeds chi - 1 (so ceil pins it), otherwise nothing.
std::optional<int> conclude_quantum(const Graph& g, const BoundReport& report,
                                    int cap = kDefaultExactCap);

}  // namespace specbound
