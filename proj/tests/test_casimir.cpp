#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "latsum/analytic_core.hpp"
#include "latsum/casimir.hpp"
#include "latsum/special_functions.hpp"
#include "oracles.hpp"

using latsum::Accuracy;
using oracle::rel_diff;

namespace {

const Accuracy tight{1e-15L, 10'000'000};

long double binom(int n, int k) {
    long double b = 1.0L;
    for (int i = 1; i <= k; ++i)
        b *= (long double)(n - k + i) / (long double)i;
    return b;
}

// F(lambda) = -(pi/2^{d+1}) sum_p binom(d,p) dC_p/dlambda, the quantity
// whose lambda -> 0 limit is the Casimir energy.
long double f_of_lambda(int d, long double lambda) {
    long double sum = 0.0L;
    for (int p = 1; p <= d; ++p)
        sum += binom(d, p) * latsum::c_term_derivative(p, lambda, tight);
    return -oracle::pi / std::pow(2.0L, (long double)(d + 1)) * sum;
}

} // namespace

TEST_CASE("closed-form energies match frozen references") {
    for (int d = 1; d <= 10; ++d) {
        const auto res = latsum::casimir_closed_form(d);
        INFO("d = ", d);
        CHECK_EQ(res.d, d);
        CHECK_LT(rel_diff(res.energy, oracle::casimir_energy[d - 1]), 1e-15L);
        CHECK_LT(res.energy, 0.0L);
        // One term for every pair p in 1..d, j in 0..p-1.
        CHECK_EQ((int)res.terms.size(), d * (d + 1) / 2);
        long double sum = 0.0L;
        for (const auto& t : res.terms) {
            CHECK_GT(t.value, 0.0L);
            CHECK_GE(t.p, 1);
            CHECK_LT(t.j, t.p);
            sum += t.value;
        }
        CHECK_LT(rel_diff(res.energy,
                          -sum / (oracle::pi *
                                  std::pow(2.0L, (long double)(d + 1)))),
                 1e-17L);
    }
    CHECK_LT(rel_diff(latsum::casimir_closed_form(1).energy,
                      -oracle::pi / 24.0L),
             1e-15L);
    // E_2 = -(pi^2 + zeta(3)) / (16 pi).
    CHECK_LT(rel_diff(latsum::casimir_closed_form(2).energy,
                      -(oracle::pi * oracle::pi + oracle::zeta_3) /
                          (16.0L * oracle::pi)),
             1e-15L);
    CHECK_THROWS_AS(latsum::casimir_closed_form(0), std::domain_error);
    CHECK_THROWS_AS(latsum::casimir_closed_form(11), std::domain_error);
}

TEST_CASE("regularized energies with and without boundaries") {
    // H_1(1) = (pi/4) (-d xi_1/d lambda)(1).
    CHECK_LT(rel_diff(latsum::regularized_with_boundaries(1, 1.0L, tight),
                      oracle::h_d1_at_1),
             1e-13L);
    // G_1(1) = pi/2 and G_2(1) = (pi/8)(4 + 4 pi).
    CHECK_LT(rel_diff(latsum::regularized_without_boundaries(1, 1.0L),
                      0.5L * oracle::pi),
             1e-17L);
    CHECK_LT(rel_diff(latsum::regularized_without_boundaries(2, 1.0L),
                      oracle::g_d2_at_1),
             1e-14L);
    CHECK_LT(rel_diff(latsum::regularized_with_boundaries(2, 0.5L, tight),
                      oracle::h_d2_at_0p5),
             1e-12L);
    CHECK_THROWS_AS(latsum::regularized_without_boundaries(2, 0.0L),
                    std::domain_error);
}

TEST_CASE("the difference H - G equals F identically") {
    for (int d = 1; d <= 4; ++d) {
        for (long double lambda : {0.5L, 1.0L, 2.0L}) {
            const long double h =
                latsum::regularized_with_boundaries(d, lambda, tight);
            const long double g =
                latsum::regularized_without_boundaries(d, lambda);
            const long double f = f_of_lambda(d, lambda);
            INFO("d = ", d, ", lambda = ", (double)lambda);
            CHECK_LT(rel_diff(h - g, f), 1e-10L);
        }
    }
}

TEST_CASE("F approaches the energy quadratically in lambda") {
    for (int d = 1; d <= 3; ++d) {
        const long double e = oracle::casimir_energy[d - 1];
        const long double gap_coarse = f_of_lambda(d, 0.04L) - e;
        const long double gap_fine = f_of_lambda(d, 0.02L) - e;
        INFO("d = ", d);
        // Halving lambda divides the gap by four when F - E is O(lambda^2).
        CHECK_GT(gap_coarse / gap_fine, 3.9L);
        CHECK_LT(gap_coarse / gap_fine, 4.1L);
    }
}

TEST_CASE("the limit route recovers the closed form") {
    const auto grid = latsum::default_limit_grid();
    REQUIRE_EQ(grid.size(), 4u);
    CHECK_EQ(grid[0], 0.08L);
    CHECK_EQ(grid[1], 0.04L);
    CHECK_EQ(grid[2], 0.02L);
    CHECK_EQ(grid[3], 0.01L);
    for (int d = 1; d <= 5; ++d) {
        const long double via_limit = latsum::casimir_via_limit(d, grid, tight);
        INFO("d = ", d);
        CHECK_LT(std::fabs(via_limit - oracle::casimir_energy[d - 1]), 1e-8L);
    }
}

TEST_CASE("the limit route validates its grid") {
    CHECK_THROWS_AS(latsum::casimir_via_limit(2, {0.08L, 0.04L}, tight),
                    std::domain_error);
    CHECK_THROWS_AS(
        latsum::casimir_via_limit(2, {0.01L, 0.02L, 0.04L}, tight),
        std::domain_error);
    CHECK_THROWS_AS(
        latsum::casimir_via_limit(2, {1.5L, 0.5L, 0.1L}, tight),
        std::domain_error);
    CHECK_THROWS_AS(
        latsum::casimir_via_limit(0, latsum::default_limit_grid(), tight),
        std::domain_error);
}

TEST_CASE("the direct mode sum approaches H") {
    const Accuracy loose{1e-10L, 10'000'000};
    const long double ms = latsum::neumann_mode_sum(2, 0.5L, loose);
    CHECK_LT(rel_diff(ms, oracle::mode_sum_d2_at_0p5), 1e-9L);
    // The analytic H carries the neglected sum-to-integral remainder; the
    // directly summed modes do not, so the two differ by about 1e-5.
    const long double h = latsum::regularized_with_boundaries(2, 0.5L, tight);
    const long double gap_pct = 100.0L * std::fabs(ms / h - 1.0L);
    CHECK_GT(gap_pct, 2e-4L);
    CHECK_LT(gap_pct, 5e-3L);
    CHECK_LT(std::fabs(gap_pct - oracle::mode_sum_gap_pct),
             0.02L * oracle::mode_sum_gap_pct);
    CHECK_THROWS_AS(latsum::neumann_mode_sum(2, -1.0L, loose),
                    std::domain_error);
}
