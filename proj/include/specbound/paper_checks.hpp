#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

// Regression table of published values for the named example graphs. The
// CLI's check-paper command runs all of them; tests drive individual pieces.
struct PaperCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<PaperCheck> run_paper_checks();

// max |computed - expected| <= tol, with both spectra sorted descending
bool spectrum_matches(const Graph& g, std::span<const double> expected,
                      double tol, std::string* detail = nullptr);

const std::array<double, 12>& tilley_expected_spectrum();
const std::array<double, 7>& h2_expected_spectrum();

}  // namespace specbound
