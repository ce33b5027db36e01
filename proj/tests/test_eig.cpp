// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "nula/eig.hpp"
#include "nula/pat.hpp"
#include "test_support.hpp"

using namespace nula;

namespace {

// Two groups of M/2 elements at -1 and +1; the Gram ratio is tan(tau)^2.
ArrayLayout two_groups(int M) {
    std::vector<double> v(static_cast<std::size_t>(M), 1.0);
    for (int i = 0; i < M / 2; ++i)
        v[static_cast<std::size_t>(i)] = -1.0;
    return ArrayLayout(std::move(v));
}

} // namespace

TEST_CASE("gram of the flat channel is rank one") {
    auto &gen = test::rng();
    const ArrayLayout lr = test::random_layout(5, gen);
    const ArrayLayout lt = test::random_layout(4, gen);
    const CMat g = gram(build_hhat(lr, lt, 0.0));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            CHECK(std::abs(g(i, j) - std::complex<double>(4.0, 0.0)) < 1e-12);

    const Spectrum s = eigenvalues_desc(g);
    CHECK(s.values[0] == doctest::Approx(20.0).epsilon(1e-12));
    for (std::size_t m = 1; m < s.values.size(); ++m)
        CHECK(s.values[m] == doctest::Approx(0.0).scale(20.0).epsilon(1e-12));
}

TEST_CASE("gram is exactly Hermitian") {
    auto &gen = test::rng();
    const ArrayLayout lr = test::random_layout(6, gen);
    const ArrayLayout lt = test::random_layout(6, gen);
    const CMat g = gram(build_hhat(lr, lt, 1.234));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            CHECK(g(i, j) == std::conj(g(j, i)));
}

TEST_CASE("two-element gram closed form") {
    const ArrayLayout two({-1.0, 1.0});
    const double tau = 0.9;
    const CMat g = gram(build_hhat(two, two, tau));
    CHECK(g(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g(0, 1).real() == doctest::Approx(2.0 * std::cos(2.0 * tau)).epsilon(1e-12));
    CHECK(std::abs(g(0, 1).imag()) < 1e-14);

    const Spectrum s = eigenvalues_desc(g);
    const double c = std::abs(2.0 * std::cos(2.0 * tau));
    CHECK(s.values[0] == doctest::Approx(2.0 + c).epsilon(1e-12));
    CHECK(s.values[1] == doctest::Approx(2.0 - c).epsilon(1e-12));
}

TEST_CASE("eigenvalues_desc on a scaled identity") {
    CMat g = CMat::identity(5);
    for (std::size_t i = 0; i < 5; ++i)
        g(i, i) = {4.0, 0.0};
    const Spectrum s = eigenvalues_desc(g);
    for (double v : s.values)
        CHECK(v == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues_desc rejects non-Hermitian input") {
    CMat g(3, 3);
    g(0, 1) = {1.0, 0.0};
    g(1, 0) = {0.5, 0.0};
    CHECK_THROWS_AS(eigenvalues_desc(g), std::invalid_argument);
}

TEST_CASE("eigenpairs satisfy the residual and unitarity bounds") {
    auto &gen = test::rng();
    const ArrayLayout lr = test::random_layout(6, gen);
    const ArrayLayout lt = test::random_layout(6, gen);
    const CMat g = gram(build_hhat(lr, lt, 0.8));
    const Spectrum s = eigenvalues_desc(g, true);
    REQUIRE(s.vectors.has_value());
    const CMat &u = *s.vectors;
    const double gnorm = g.frobenius_norm();

    for (std::size_t m = 0; m < s.values.size(); ++m) {
        double resid = 0.0;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t j = 0; j < g.cols(); ++j)
                acc += g(i, j) * u(j, m);
            acc -= s.values[m] * u(i, m);
            resid += std::norm(acc);
        }
        CHECK(std::sqrt(resid) <= 1e-10 * gnorm);
    }

    for (std::size_t a = 0; a < u.cols(); ++a)
        for (std::size_t b = 0; b < u.cols(); ++b) {
            std::complex<double> dot{0.0, 0.0};
            for (std::size_t i = 0; i < u.rows(); ++i)
                dot += std::conj(u(i, a)) * u(i, b);
            CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("spectrum sums to the trace and is even in tau") {
    auto &gen = test::rng();
    const ArrayLayout lr = test::random_layout(6, gen);
    const ArrayLayout lt = test::random_layout(5, gen);
    const double tau = 1.1;

    const Spectrum sp = eigenvalues_desc(gram(build_hhat(lr, lt, tau)));
    const Spectrum sm = eigenvalues_desc(gram(build_hhat(lr, lt, -tau)));
    double sum = 0.0;
    for (double v : sp.values)
        sum += v;
    CHECK(sum == doctest::Approx(30.0).epsilon(1e-9));
    for (std::size_t m = 0; m < sp.values.size(); ++m)
        CHECK(sp.values[m] == doctest::Approx(sm.values[m]).epsilon(1e-11).scale(30.0));
}

TEST_CASE("emg counting") {
    SUBCASE("equal eigenvalues count fully") {
        CMat g = CMat::identity(6);
        const Spectrum s = eigenvalues_desc(g);
        CHECK(emg(s, 1.0) == 6);
        CHECK(emg(s, 1e-6) == 6);
    }

    SUBCASE("ULA at the Rayleigh point reaches M") {
        const int M = 6, N = 6;
        const double tau_ray = std::numbers::pi * (M - 1) * (N - 1) / (2.0 * N);
        const Spectrum s = layout_spectrum(ula_layout(M), ula_layout(N), tau_ray);
        CHECK(emg(s, 0.1) == M);
    }

    SUBCASE("two groups cross the -10 dB threshold at the known tau") {
        const ArrayLayout g4 = two_groups(4);
        const Spectrum s = layout_spectrum(g4, g4, 0.3063);
        CHECK(emg(s, 0.1) == 2); // tan(0.3063)^2 = 0.10001 barely qualifies
        const Spectrum below = layout_spectrum(g4, g4, 0.3060);
        CHECK(emg(below, 0.1) == 1);
    }

    SUBCASE("gamma domain") {
        const Spectrum s = eigenvalues_desc(CMat::identity(3));
        CHECK_THROWS_AS(emg(s, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(emg(s, 1.5), std::invalid_argument);
        CHECK_THROWS_AS(emg(Spectrum{}, 0.5), std::invalid_argument);
    }
}

TEST_CASE("layout_spectrum collapses duplicates without changing values") {
    const ArrayLayout dup({-1.0, -1.0, 0.3, 0.3, 1.0});
    const ArrayLayout lt({-1.0, -0.2, 0.6, 1.0});
    const double tau = 1.7;

    const Spectrum fast = layout_spectrum(dup, lt, tau);
    const Spectrum full = eigenvalues_desc(gram(build_hhat(dup, lt, tau)));
    REQUIRE(fast.values.size() == full.values.size());
    for (std::size_t m = 0; m < fast.values.size(); ++m)
        CHECK(fast.values[m] ==
              doctest::Approx(full.values[m]).epsilon(1e-9).scale(20.0));
}

TEST_CASE("tau_min_search reproduces the ULA operating point") {
    const ArrayLayout ula = ula_layout(24);
    const auto r = tau_min_search(ula, ula, 2, 0.1);
    REQUIRE(r.has_value());
    CHECK(r->tau_min == doctest::Approx(0.8776).epsilon(1e-3));
    CHECK(r->tau_min == doctest::Approx(0.8776448).epsilon(1e-5));
    CHECK(r->K == 2);
    CHECK(r->gamma == doctest::Approx(0.1));

    // The bracket is genuine: just below misses K, at the result reaches it.
    CHECK(emg(layout_spectrum(ula, ula, r->bracket_lo), 0.1) < 2);
    CHECK(emg(layout_spectrum(ula, ula, r->bracket_hi), 0.1) >= 2);
    CHECK(r->bracket_lo <= r->tau_min);
    CHECK(r->tau_min <= r->bracket_hi);
}

TEST_CASE("tau_min_search matches the two-group closed form") {
    const ArrayLayout g8 = two_groups(8);
    for (double gamma : {0.01, 0.1, 0.5}) {
        const auto r = tau_min_search(g8, g8, 2, gamma);
        REQUIRE(r.has_value());
        CHECK(r->tau_min ==
              doctest::Approx(std::atan(std::sqrt(gamma))).epsilon(1e-9));
        CHECK(r->ratio_at_tau == doctest::Approx(gamma).epsilon(1e-6));
    }
}

TEST_CASE("tau_min_search preconditions and failure") {
    const ArrayLayout g4 = two_groups(4);
    CHECK_THROWS_AS(tau_min_search(g4, g4, 0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(tau_min_search(g4, g4, 5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(tau_min_search(g4, g4, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tau_min_search(g4, g4, 2, 1.0), std::invalid_argument);

    TauSearchConfig cfg;
    cfg.tau_max = 0.5; // tan(0.5)^2 = 0.298 stays below gamma = 0.9
    CHECK_FALSE(tau_min_search(g4, g4, 2, 0.9, cfg).has_value());

    // Rank 2 deployment can never reach K = 3.
    CHECK_FALSE(tau_min_search(g4, g4, 3, 0.1).has_value());
}

TEST_CASE("halving the grid step refines tau_min monotonically") {
    const ArrayLayout ula = ula_layout(6);
    TauSearchConfig coarse;
    coarse.step = 2e-3;
    TauSearchConfig fine;
    fine.step = 1e-3;
    const auto rc = tau_min_search(ula, ula, 2, 0.1, coarse);
    const auto rf = tau_min_search(ula, ula, 2, 0.1, fine);
    REQUIRE(rc.has_value());
    REQUIRE(rf.has_value());
    CHECK(rf->tau_min <= rc->tau_min + coarse.step);
    CHECK(rc->tau_min <= rf->tau_min + coarse.step);
}

TEST_CASE("ratio_sweep rows") {
    const ArrayLayout g6 = two_groups(6);
    std::vector<double> grid;
    for (int i = 1; i <= 40; ++i)
        grid.push_back(0.03 * i);

    const auto rows = ratio_sweep(g6, g6, 2, grid);
    REQUIRE(rows.size() == grid.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].tau == grid[i]);
        // Tight two-group eigenvalues are N(1 +/- |cos 2tau|), so the ratio
        // is (1 - |cos 2tau|)/(1 + |cos 2tau|): tan^2(tau) below pi/4 and
        // cot^2(tau) above, where the mode order swaps.
        const double c = std::abs(std::cos(2.0 * rows[i].tau));
        CHECK(rows[i].ratio == doctest::Approx((1.0 - c) / (1.0 + c)).epsilon(1e-9));
    }

    // Multi-threaded execution must give bit-identical rows.
    const auto rows4 = ratio_sweep(g6, g6, 2, grid, 4);
    REQUIRE(rows4.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows4[i].tau == rows[i].tau);
        CHECK(rows4[i].ratio == rows[i].ratio);
    }

    // K >= 2 ratios vanish as tau -> 0.
    const auto tiny = ratio_sweep(g6, g6, 2, {1e-3});
    CHECK(tiny[0].ratio < 1e-4);
}

TEST_CASE("max_achievable_emg") {
    const ArrayLayout one({0.0});
    const ArrayLayout ula4 = ula_layout(4);
    CHECK(max_achievable_emg(one, ula4, 0.1) == 1);

    const auto dep = groupwise_fekete_deploy(8, 3, 0.0);
    CHECK(max_achievable_emg(dep.alphas, dep.alphas, 0.01) == 3);

    CHECK(max_achievable_emg(ula4, ula4, 0.1) == 4);
}
