#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specbound/errors.hpp"
#include "specbound/named_graphs.hpp"
#include "specbound/penergy.hpp"
#include "specbound/spectrum.hpp"
#include "test_util.hpp"

using namespace specbound;

TEST_CASE("turan signed energies match the closed form") {
    for (long r = 2; r <= 4; ++r) {
        for (long n = 1; n <= 3; ++n) {
            Spectrum s = spectrum(named_graph("turan", {n, r}));
            for (double p : {0.0, 0.3, 0.5, 1.5, 2.0, 7.0, 40.0}) {
                PEnergyPair e = p_energy(s, p);
                double expect_pos = p * std::log((r - 1.0) * n);
                double expect_neg = std::log(r - 1.0) + p * std::log(static_cast<double>(n));
                CHECK(e.log_pos == doctest::Approx(expect_pos).epsilon(1e-10).scale(1.0));
                CHECK(e.log_neg == doctest::Approx(expect_neg).epsilon(1e-10).scale(1.0));
            }
        }
    }
}

TEST_CASE("p = 0 returns the inertia counts exactly") {
    Spectrum h2 = spectrum(named_graph("h2"));
    PEnergyPair e = p_energy(h2, 0.0);
    CHECK(std::exp(e.log_pos) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::exp(e.log_neg) == doctest::Approx(4.0).epsilon(1e-14));

    // a star has near-zero eigenvalues that must not leak into the counts
    Spectrum s9 = spectrum(named_graph("star", {9}));
    PEnergyPair e9 = p_energy(s9, 0.0);
    CHECK(std::exp(e9.log_pos) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::exp(e9.log_neg) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trace zero forces equal signed energies at p = 1") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 30);
        Spectrum s = spectrum(testutil::random_connected_graph(n, rng));
        PEnergyPair e = p_energy(s, 1.0);
        CHECK(std::fabs(e.log_pos - e.log_neg) <= 1e-9);
    }
}

TEST_CASE("p = 2 recovers twice the edge count") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 40);
        Graph g = testutil::random_connected_graph(n, rng);
        PEnergyPair e = p_energy(spectrum(g), 2.0);
        double total = std::exp(e.log_pos) + std::exp(e.log_neg);
        CHECK(total == doctest::Approx(2.0 * g.num_edges()).epsilon(1e-6));
    }
}

TEST_CASE("energy ratio hits the published optima") {
    Spectrum til = spectrum(named_graph("tilley"));
    CHECK(energy_ratio(til, 13.3466) == doctest::Approx(2.05114).epsilon(1e-4));

    Spectrum h2 = spectrum(named_graph("h2"));
    CHECK(energy_ratio(h2, 0.562125) == doctest::Approx(2.0064).epsilon(1e-3));
}

TEST_CASE("turan ratio is exactly r - 1 away from p = 1") {
    for (long r = 2; r <= 4; ++r) {
        Spectrum s = spectrum(named_graph("turan", {2, r}));
        for (double p : {0.0, 0.25, 0.9, 1.1, 2.0, 11.0})
            CHECK(energy_ratio(s, p) == doctest::Approx(r - 1.0).epsilon(1e-11));
    }
}

TEST_CASE("a single edge has ratio 1 for every p") {
    Spectrum k2 = spectrum(named_graph("complete", {2}));
    for (double p : {0.0, 0.5, 1.0, 2.0, 100.0})
        CHECK(energy_ratio(k2, p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("limit coefficients") {
    // C4 spectrum {2, 0, 0, -2}: both sides reduce to a single value 2
    Spectrum c4 = spectrum(named_graph("cycle", {4}));
    LimitCoefficients lc = limit_coefficients(c4);
    CHECK(lc.alpha_pos == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(lc.alpha_neg == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(energy_ratio(c4, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    Spectrum k2 = spectrum(named_graph("complete", {2}));
    LimitCoefficients lk = limit_coefficients(k2);
    CHECK(lk.alpha_pos == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(lk.alpha_neg == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    for (long r = 2; r <= 4; ++r)
        for (long n = 1; n <= 3; ++n) {
            Spectrum t = spectrum(named_graph("turan", {n, r}));
            LimitCoefficients lt = limit_coefficients(t);
            CHECK(lt.alpha_pos ==
                  doctest::Approx(std::log((r - 1.0) * n)).scale(1.0).epsilon(1e-10));
            CHECK(lt.alpha_neg ==
                  doctest::Approx(std::log(static_cast<double>(n))).scale(1.0).epsilon(1e-10));
        }
}

TEST_CASE("ratio is continuous across the p = 1 limit") {
    for (const auto& sg : testutil::connected_graphs(6)) {
        Spectrum s = spectrum(testutil::to_graph(sg));
        double lim = energy_ratio(s, 1.0);
        CHECK(std::fabs(energy_ratio(s, 1.0 + 1e-4) - lim) <= 1e-2 * lim);
        CHECK(std::fabs(energy_ratio(s, 1.0 - 1e-4) - lim) <= 1e-2 * lim);
    }
}

TEST_CASE("large p approaches the extreme eigenvalue ratio") {
    for (int n : {3, 5, 8, 10}) {
        Spectrum s = spectrum(named_graph("complete", {n}));
        double target = s.lambda_max() / -s.lambda_min();
        CHECK(std::fabs(energy_ratio(s, 500.0) - target) <= 0.01 * target);
    }
    for (int n : {5, 7, 9, 11}) {
        Spectrum s = spectrum(named_graph("cycle", {n}));
        double target = s.lambda_max() / -s.lambda_min();
        CHECK(std::fabs(energy_ratio(s, 500.0) - target) <= 0.01 * target);
    }
    Spectrum pet = spectrum(named_graph("petersen"));
    CHECK(std::fabs(energy_ratio(pet, 500.0) - 1.5) <= 0.015);
}

TEST_CASE("log domain survives p = 1000 on a graph with lambda_1 = 100") {
    Spectrum s = spectrum(named_graph("complete", {101}));
    double h = energy_ratio(s, 1000.0);
    CHECK(std::isfinite(h));
    CHECK(h == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("signed energy inequalities on small connected graphs") {
    // E_p >= 2 m^(p/2) and min(E_p+, E_p-) >= (n-1)^(p/2) for 0 < p < 1
    for (int n = 2; n <= 5; ++n) {
        for (const auto& sg : testutil::connected_graphs(n)) {
            Graph g = testutil::to_graph(sg);
            Spectrum s = spectrum(g);
            for (int i = 1; i <= 9; ++i) {
                double p = 0.1 * i;
                PEnergyPair e = p_energy(s, p);
                double pos = std::exp(e.log_pos), neg = std::exp(e.log_neg);
                CHECK(pos + neg >= 2.0 * std::pow(g.num_edges(), p / 2) - 1e-9);
                CHECK(std::min(pos, neg) >= std::pow(n - 1.0, p / 2) - 1e-9);
            }
        }
    }
    // equality for stars
    for (int n = 2; n <= 9; ++n) {
        Spectrum s = spectrum(named_graph("star", {n}));
        for (int i = 1; i <= 9; ++i) {
            double p = 0.1 * i;
            PEnergyPair e = p_energy(s, p);
            double floor_n = std::pow(n - 1.0, p / 2);
            CHECK(std::min(std::exp(e.log_pos), std::exp(e.log_neg)) ==
                  doctest::Approx(floor_n).epsilon(1e-9));
        }
    }
}

TEST_CASE("error paths") {
    Spectrum edgeless = spectrum(Graph(3, {}));
    CHECK_THROWS_AS(p_energy(edgeless, 1.0), EmptyGraph);
    CHECK_THROWS_AS(limit_coefficients(edgeless), EmptyGraph);
    CHECK_THROWS_AS(energy_ratio(edgeless, 2.0), EmptyGraph);

    Spectrum k3 = spectrum(named_graph("complete", {3}));
    CHECK_THROWS_AS(p_energy(k3, -0.5), NegativeP);
    CHECK_THROWS_AS(energy_ratio(k3, -4.0), NegativeP);
}
