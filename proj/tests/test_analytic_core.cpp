#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "latsum/analytic_core.hpp"
#include "latsum/special_functions.hpp"
#include "oracles.hpp"

using latsum::Accuracy;
using latsum::ChiMode;
using latsum::EvalConfig;
using latsum::Method;
using latsum::ToleranceError;
using oracle::rel_diff;

namespace {

const Accuracy tight{1e-15L, 10'000'000};

EvalConfig make(int d, long double lambda) {
    EvalConfig cfg;
    cfg.d = d;
    cfg.lambda = lambda;
    cfg.accuracy = tight;
    return cfg;
}

long double coth(long double x) { return 1.0L + 2.0L / std::expm1(2.0L * x); }

// Closed forms of the first even-j series, derived by partial fractions.
long double chi0_closed(long double lambda) {
    return (coth(0.5L * lambda) - 2.0L / lambda) / (4.0L * lambda);
}

long double chi2_closed(long double lambda) {
    const long double s = 1.0L / std::sinh(0.5L * lambda);
    return s * s / (16.0L * lambda * lambda) +
           coth(0.5L * lambda) / (8.0L * lambda * lambda * lambda) -
           1.0L / (2.0L * lambda * lambda * lambda * lambda);
}

} // namespace

TEST_CASE("chi_direct reproduces the frozen grid") {
    for (int ji = 0; ji < 8; ++ji) {
        for (int li = 0; li < 8; ++li) {
            const int j = oracle::chi_grid_j[ji];
            const long double lambda = oracle::chi_grid_lambda[li];
            const auto res = latsum::chi_direct(j, lambda, tight);
            INFO("j = ", j, ", lambda = ", (double)lambda);
            CHECK_LT(rel_diff(res.value, oracle::chi_grid_value[ji][li]), 2e-14L);
            CHECK_EQ(res.j, j);
            CHECK_EQ(res.lambda, lambda);
            CHECK_GE(res.tail_bound, 0.0L);
            CHECK_GT(res.terms_used, 0u);
        }
    }
}

TEST_CASE("chi_direct matches the closed forms") {
    for (long double lambda : {0.3L, 0.5L, 1.0L, 2.0L, 5.0L, 10.0L, 50.0L}) {
        INFO("lambda = ", (double)lambda);
        CHECK_LT(rel_diff(latsum::chi_direct(0, lambda, tight).value,
                          chi0_closed(lambda)),
                 5e-16L);
    }
    for (long double lambda : {1.0L, 2.0L, 5.0L, 10.0L}) {
        INFO("lambda = ", (double)lambda);
        CHECK_LT(rel_diff(latsum::chi_direct(2, lambda, tight).value,
                          chi2_closed(lambda)),
                 1e-15L);
    }
    CHECK_LT(rel_diff(latsum::chi_direct(0, 1.0L, tight).value,
                      oracle::chi0_at_1),
             1e-15L);
    CHECK_LT(rel_diff(latsum::chi_direct(2, 1.0L, tight).value,
                      oracle::chi2_at_1),
             1e-15L);
}

TEST_CASE("chi_direct approaches the zeta limit as lambda tends to zero") {
    // chi_j(0) = zeta(j + 2) / (2 pi)^{j+2}.
    for (int j = 0; j <= 6; ++j) {
        const long double limit =
            latsum::zeta_int(j + 2) /
            std::pow(2.0L * oracle::pi, (long double)(j + 2));
        const long double at_tiny = latsum::chi_direct(j, 1e-8L, tight).value;
        INFO("j = ", j);
        CHECK_LT(rel_diff(at_tiny, limit), 1e-10L);
        // And the value sits below the limit for positive lambda.
        CHECK_LT(at_tiny, limit);
    }
}

TEST_CASE("chi power series agrees with direct summation") {
    for (int j = 0; j <= 5; ++j) {
        for (long double lambda : {0.1L, 1.0L, 3.0L, 5.0L, 6.2L}) {
            INFO("j = ", j, ", lambda = ", (double)lambda);
            const auto ps = latsum::chi_power_series(j, lambda, tight);
            const auto direct = latsum::chi_direct(j, lambda, tight);
            CHECK_LT(rel_diff(ps.value, direct.value), 1e-13L);
        }
    }
    // Terms grow before they shrink here; the tail logic must wait out the hump.
    const auto hump = latsum::chi_power_series(9, 3.0L, tight);
    CHECK_LT(rel_diff(hump.value, oracle::chi9_at_3), 1e-13L);
    CHECK_LT(rel_diff(latsum::chi_direct(9, 3.0L, tight).value,
                      oracle::chi9_at_3),
             1e-13L);
}

TEST_CASE("chi power series domain ends at the first pole") {
    const long double two_pi = 2.0L * std::acos(-1.0L);
    CHECK_THROWS_AS(latsum::chi_power_series(0, two_pi, tight),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::chi_power_series(0, 6.3L, tight),
                    std::domain_error);
    CHECK_NOTHROW(latsum::chi_power_series(0, 6.28L, tight));
    CHECK_THROWS_AS(latsum::chi_power_series(0, 1.0L, Accuracy{1e-15L, 3}),
                    ToleranceError);
}

TEST_CASE("chi dispatcher selects the requested route") {
    const auto a = latsum::chi(1, 0.7L, tight, ChiMode::direct);
    const auto b = latsum::chi_direct(1, 0.7L, tight);
    CHECK_EQ(a.value, b.value);
    const auto c = latsum::chi(1, 0.7L, tight, ChiMode::power_series);
    const auto d = latsum::chi_power_series(1, 0.7L, tight);
    CHECK_EQ(c.value, d.value);
}

TEST_CASE("i_term closed form and overflow guard") {
    CHECK_LT(rel_diff(latsum::i_term(1, 1.0L), 2.0L), 1e-18L);
    CHECK_LT(rel_diff(latsum::i_term(1, 0.25L), 8.0L), 1e-18L);
    CHECK_LT(rel_diff(latsum::i_term(2, 1.0L), 2.0L * oracle::pi), 5e-19L);
    CHECK_LT(rel_diff(latsum::i_term(2, 2.0L), 0.5L * oracle::pi), 5e-19L);
    CHECK_LT(rel_diff(latsum::i_term(3, 1.0L), 8.0L * oracle::pi), 5e-19L);
    CHECK_LT(rel_diff(latsum::i_term(4, 1.0L), 12.0L * oracle::pi * oracle::pi),
             1e-18L);
    CHECK_THROWS_AS(latsum::i_term(0, 1.0L), std::domain_error);
    CHECK_THROWS_AS(latsum::i_term(10, 1e-500L), std::overflow_error);
}

TEST_CASE("c_term small and large regulator limits") {
    for (int d = 1; d <= 5; ++d) {
        INFO("d = ", d);
        const long double small = latsum::c_term(d, 1e-6L, tight);
        CHECK_GT(small, 0.0L);
        CHECK_LT(small, 1e-5L);
        const long double gap = latsum::c_term(d, 1000.0L, tight) - 1.0L;
        const long double expected = oracle::c_term_large_lambda_gap[d - 1];
        CHECK_LT(std::fabs(gap - expected),
                 1e-4L * std::fabs(expected) + 1e-16L);
    }
    // d = 1 closed form: C_1(lambda) = coth(lambda/2) - 2/lambda.
    for (long double lambda : {0.5L, 1.0L, 5.0L}) {
        INFO("lambda = ", (double)lambda);
        CHECK_LT(rel_diff(latsum::c_term(1, lambda, tight),
                          coth(0.5L * lambda) - 2.0L / lambda),
                 1e-14L);
    }
    CHECK_LT(rel_diff(latsum::c_term(1, 1.0L, tight), oracle::c_term_d1_at_1),
             1e-15L);
}

TEST_CASE("lambda_j telescopes to the xi breakdown") {
    // Lambda_0(lambda) = 2/(e^lambda - 1).
    for (long double lambda : {0.5L, 1.0L, 2.0L, 5.0L}) {
        INFO("lambda = ", (double)lambda);
        CHECK_LT(rel_diff(latsum::lambda_j(0, lambda, tight).value,
                          2.0L / std::expm1(lambda)),
                 1e-13L);
    }
    for (int d = 1; d <= 6; ++d) {
        for (long double lambda : {0.5L, 1.0L, 3.0L, 10.0L}) {
            long double sum = 0.0L;
            for (int j = 0; j < d; ++j)
                sum += latsum::lambda_j(j, lambda, tight).value;
            const auto whole = latsum::xi_formula(make(d, lambda));
            INFO("d = ", d, ", lambda = ", (double)lambda);
            CHECK_LT(rel_diff(sum, whole.xi), 1e-11L);
            CHECK_GT(sum + 1.0L, 0.0L);
        }
    }
}

TEST_CASE("xi_formula frozen anchors") {
    const struct {
        int d;
        long double lambda, value, tol;
    } anchors[] = {
        {1, 1.0L, oracle::xi_d1_at_1, 1e-14L},
        {2, 0.1L, oracle::xi_d2_at_0p1, 1e-14L},
        {2, 1.0L, oracle::xi_d2_at_1, 1e-14L},
        {3, 0.5L, oracle::xi_d3_at_0p5, 1e-14L},
        {4, 2.0L, oracle::xi_d4_at_2, 1e-14L},
        {5, 1.0L, oracle::xi_d5_at_1, 1e-14L},
        // lambda = 10 amplifies chi rounding through the I - 1 + C cancellation.
        {2, 10.0L, oracle::xi_d2_at_10, 1e-12L},
        {5, 10.0L, oracle::xi_d5_at_10, 1e-12L},
    };
    for (const auto& a : anchors) {
        const auto res = latsum::xi_formula(make(a.d, a.lambda));
        INFO("d = ", a.d, ", lambda = ", (double)a.lambda);
        CHECK_LT(rel_diff(res.xi, a.value), a.tol);
        CHECK_EQ(res.method, Method::direct_chi);
        CHECK_LT(std::fabs(res.xi - (res.i_term - 1.0L + res.c_term)),
                 1e-18L * std::fabs(res.xi) + 1e-30L);
    }
}

TEST_CASE("one dimensional evaluation is exact") {
    for (long double lambda : {0.5L, 1.0L, 2.0L, 5.0L, 10.0L}) {
        const long double exact = 2.0L / std::expm1(lambda);
        INFO("lambda = ", (double)lambda);
        CHECK_LT(rel_diff(latsum::xi_formula(make(1, lambda)).xi, exact),
                 1e-12L);
    }
    for (long double lambda : {0.5L, 1.0L, 2.0L, 5.0L}) {
        const long double exact = 2.0L / std::expm1(lambda);
        INFO("lambda = ", (double)lambda);
        CHECK_LT(rel_diff(latsum::xi_formula(make(1, lambda),
                                             ChiMode::power_series)
                              .xi,
                          exact),
                 1e-12L);
    }
    // The power-series route keeps the pole restriction.
    CHECK_THROWS_AS(latsum::xi_formula(make(1, 10.0L), ChiMode::power_series),
                    std::domain_error);
}

TEST_CASE("xi decreases in lambda and increases in d") {
    for (int d = 1; d <= 5; ++d) {
        long double prev = std::numeric_limits<long double>::infinity();
        for (long double lambda : {0.3L, 0.5L, 1.0L, 2.0L, 4.0L, 8.0L}) {
            const long double v = latsum::xi_formula(make(d, lambda)).xi;
            INFO("d = ", d, ", lambda = ", (double)lambda);
            CHECK_LT(v, prev);
            CHECK_GT(v, 0.0L);
            prev = v;
        }
    }
    for (int d = 1; d <= 4; ++d)
        CHECK_GT(latsum::xi_formula(make(d + 1, 1.0L)).xi,
                 latsum::xi_formula(make(d, 1.0L)).xi);
}

TEST_CASE("xi_derivative matches frozen values") {
    CHECK_LT(rel_diff(latsum::xi_derivative(make(1, 1.0L)),
                      oracle::neg_dxi_d1_at_1),
             1e-13L);
    CHECK_LT(rel_diff(latsum::xi_derivative(make(2, 0.5L)),
                      oracle::neg_dxi_d2_at_0p5),
             1e-13L);
    CHECK_LT(rel_diff(latsum::xi_derivative(make(3, 1.0L)),
                      oracle::neg_dxi_d3_at_1),
             1e-13L);
    // Consistency of the split derivative routes: -dxi/dlambda =
    // -(dI/dlambda) - (dC/dlambda), all three exposed separately.
    for (int d = 1; d <= 5; ++d) {
        const long double whole = latsum::xi_derivative(make(d, 0.8L));
        const long double split = -(latsum::i_term_derivative(d, 0.8L) +
                                    latsum::c_term_derivative(d, 0.8L, tight));
        INFO("d = ", d);
        CHECK_LT(rel_diff(whole, split), 1e-17L);
        CHECK_GT(whole, 0.0L);
    }
}

TEST_CASE("configuration validation rejects bad inputs") {
    CHECK_THROWS_AS(make(0, 1.0L).validate(), std::domain_error);
    CHECK_THROWS_AS(make(11, 1.0L).validate(), std::domain_error);
    CHECK_THROWS_AS(make(1, 0.0L).validate(), std::domain_error);
    CHECK_THROWS_AS(make(1, -2.0L).validate(), std::domain_error);
    CHECK_THROWS_AS(
        make(1, std::numeric_limits<long double>::infinity()).validate(),
        std::domain_error);
    CHECK_THROWS_AS(
        make(1, std::numeric_limits<long double>::quiet_NaN()).validate(),
        std::domain_error);
    // High dimensions with a tiny regulator are outside the supported range.
    CHECK_THROWS_AS(make(6, 0.05L).validate(), std::domain_error);
    CHECK_NOTHROW(make(6, 0.051L).validate());
    CHECK_NOTHROW(make(5, 0.01L).validate());
    CHECK_THROWS_AS((Accuracy{0.0L, 10}.validate()), std::domain_error);
    CHECK_THROWS_AS((Accuracy{1.0L, 10}.validate()), std::domain_error);
    CHECK_THROWS_AS((Accuracy{-0.5L, 10}.validate()), std::domain_error);
    CHECK_THROWS_AS((Accuracy{1e-12L, 0}.validate()), std::domain_error);
    CHECK_THROWS_AS(latsum::chi_direct(-1, 1.0L, tight), std::domain_error);
    CHECK_THROWS_AS(latsum::chi_direct(0, 1.0L, Accuracy{1e-15L, 8}),
                    ToleranceError);
    EvalConfig bad = make(0, 1.0L);
    CHECK_THROWS_AS(latsum::xi_formula(bad), std::domain_error);
}
