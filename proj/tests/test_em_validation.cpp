#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "latsum/accuracy.hpp"
#include "latsum/analytic_core.hpp"
#include "latsum/em_validation.hpp"
#include "latsum/quadrature.hpp"
#include "oracles.hpp"

using oracle::rel_diff;

TEST_CASE("fornberg weights reproduce textbook stencils") {
    const auto first = latsum::fornberg_weights(0.0L, {-1.0L, 0.0L, 1.0L}, 1);
    REQUIRE_EQ(first.size(), 3u);
    CHECK_EQ(first[0], -0.5L);
    CHECK_EQ(first[1], 0.0L);
    CHECK_EQ(first[2], 0.5L);

    const auto second = latsum::fornberg_weights(0.0L, {-1.0L, 0.0L, 1.0L}, 2);
    CHECK_EQ(second[0], 1.0L);
    CHECK_EQ(second[1], -2.0L);
    CHECK_EQ(second[2], 1.0L);

    const auto interp = latsum::fornberg_weights(0.0L, {-1.0L, 0.0L, 1.0L}, 0);
    CHECK_EQ(interp[0], 0.0L);
    CHECK_EQ(interp[1], 1.0L);
    CHECK_EQ(interp[2], 0.0L);

    const auto onesided =
        latsum::fornberg_weights(0.0L, {0.0L, 1.0L, 2.0L, 3.0L}, 1);
    CHECK_LT(std::fabs(onesided[0] + 11.0L / 6.0L), 1e-17L);
    CHECK_LT(std::fabs(onesided[1] - 3.0L), 1e-17L);
    CHECK_LT(std::fabs(onesided[2] + 1.5L), 1e-17L);
    CHECK_LT(std::fabs(onesided[3] - 1.0L / 3.0L), 1e-17L);
    long double wsum = 0.0L;
    for (long double w : onesided)
        wsum += w;
    CHECK_LT(std::fabs(wsum), 1e-17L);
}

TEST_CASE("fornberg stencils differentiate a smooth function") {
    std::vector<long double> xs(9);
    for (int k = 0; k < 9; ++k)
        xs[k] = 0.3L + (long double)(k - 4) * 0.05L;
    const auto w1 = latsum::fornberg_weights(0.3L, xs, 1);
    const auto w2 = latsum::fornberg_weights(0.3L, xs, 2);
    long double d1 = 0.0L, d2 = 0.0L;
    for (int k = 0; k < 9; ++k) {
        d1 += w1[k] * std::sin(xs[k]);
        d2 += w2[k] * std::sin(xs[k]);
    }
    CHECK_LT(std::fabs(d1 - std::cos(0.3L)), 1e-10L);
    CHECK_LT(std::fabs(d2 + std::sin(0.3L)), 1e-9L);
}

TEST_CASE("fornberg weights validate their inputs") {
    CHECK_THROWS_AS(latsum::fornberg_weights(0.0L, {0.0L, 1.0L}, -1),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::fornberg_weights(0.0L, {0.0L, 1.0L}, 2),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::fornberg_weights(0.0L, {}, 0), std::domain_error);
}

TEST_CASE("odd derivatives of the even summand vanish") {
    const auto vals = latsum::odd_derivatives_vanish(1.0L, 1.0L, {1, 3, 5, 7});
    REQUIRE_EQ(vals.size(), 4u);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        INFO("entry ", i);
        CHECK_LT(std::fabs(vals[i]), 1e-8L);
    }
    CHECK_THROWS_AS(latsum::odd_derivatives_vanish(1.0L, 1.0L, {4}),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::odd_derivatives_vanish(1.0L, 1.0L, {9}),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::odd_derivatives_vanish(1.0L, 1.0L, {-1}),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::odd_derivatives_vanish(0.0L, 1.0L, {1}),
                    std::domain_error);
}

TEST_CASE("the remainder is independent of the Bernoulli order") {
    std::vector<latsum::RemainderCheck> checks;
    for (int q : {1, 2, 3}) {
        const auto res = latsum::remainder_direct(q, 1.0L, 1.0L);
        INFO("q = ", q);
        CHECK_EQ(res.q, q);
        CHECK_EQ(res.lambda, 1.0L);
        CHECK_EQ(res.c_shift, 1.0L);
        CHECK_GE(res.quad_error, 0.0L);
        CHECK_LT(res.quad_error, 1e-6L);
        CHECK_LT(std::fabs(res.value - oracle::remainder_l1_c1), 1e-7L);
        checks.push_back(res);
    }
    CHECK_LT(std::fabs(checks[0].value - checks[1].value), 1e-7L);
    CHECK_LT(std::fabs(checks[1].value - checks[2].value), 1e-7L);
    // The q = 4 stencil has the largest truncation error; it still lands
    // within a micro of the others.
    const auto r4 = latsum::remainder_direct(4, 1.0L, 1.0L);
    CHECK_LT(std::fabs(r4.value - oracle::remainder_l1_c1), 1e-6L);
}

TEST_CASE("remainder routes agree with frozen references") {
    CHECK_LT(std::fabs(latsum::remainder_reference(1.0L, 1.0L) -
                       oracle::remainder_l1_c1),
             1e-9L * oracle::remainder_l1_c1 + 1e-13L);
    CHECK_LT(std::fabs(latsum::remainder_reference(2.0L, 0.25L) -
                       oracle::remainder_l2_c0p25),
             1e-9L * oracle::remainder_l2_c0p25 + 1e-13L);
    CHECK_LT(std::fabs(latsum::remainder_reference(0.5L, 4.0L) -
                       oracle::remainder_l0p5_c4),
             1e-9L * oracle::remainder_l0p5_c4 + 1e-13L);
    const auto direct = latsum::remainder_direct(1, 2.0L, 0.25L);
    CHECK_LT(std::fabs(direct.value - oracle::remainder_l2_c0p25), 1e-7L);
}

TEST_CASE("remainder guards") {
    CHECK_THROWS_AS(latsum::remainder_direct(0, 1.0L, 1.0L),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::remainder_direct(5, 1.0L, 1.0L),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::remainder_direct(1, 0.0L, 1.0L),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::remainder_direct(1, 1.0L, -2.0L),
                    std::domain_error);
    CHECK_THROWS_AS(latsum::remainder_direct(1, 0.005L, 1.0L),
                    latsum::GuardError);
    CHECK_THROWS_AS(latsum::remainder_reference(-1.0L, 1.0L),
                    std::domain_error);
}

TEST_CASE("the volume term survives a quadrature recomputation") {
    for (int d = 1; d <= 5; ++d) {
        for (long double lambda : {0.5L, 1.0L, 2.0L}) {
            INFO("d = ", d, ", lambda = ", (double)lambda);
            CHECK_LT(rel_diff(latsum::i_term_quadrature(d, lambda),
                              latsum::i_term(d, lambda)),
                     1e-11L);
        }
    }
    CHECK_THROWS_AS(latsum::i_term_quadrature(0, 1.0L), std::domain_error);
    CHECK_THROWS_AS(latsum::i_term_quadrature(11, 1.0L), std::domain_error);
    CHECK_THROWS_AS(latsum::i_term_quadrature(2, 0.0L), std::domain_error);
}

TEST_CASE("gamma and angular identities hold to rounding") {
    for (int d = 1; d <= 12; ++d) {
        INFO("d = ", d);
        CHECK_LT(latsum::gamma_identity_residual(d), 1e-14L);
    }
    for (int k = 0; k <= 6; ++k) {
        INFO("k = ", k);
        CHECK_LT(latsum::angular_integral_residual(k), 1e-11L);
    }
    CHECK_THROWS_AS(latsum::gamma_identity_residual(0), std::domain_error);
    CHECK_THROWS_AS(latsum::gamma_identity_residual(21), std::domain_error);
    CHECK_THROWS_AS(latsum::angular_integral_residual(-1), std::domain_error);
    CHECK_THROWS_AS(latsum::angular_integral_residual(21), std::domain_error);
}

TEST_CASE("the adaptive integrator is exact, accurate, and honest") {
    const auto sq = latsum::adaptive_simpson(
        [](long double x) { return x * x; }, 0.0L, 1.0L, 1e-18L, 0.0L);
    CHECK_LT(rel_diff(sq.value, 1.0L / 3.0L), 1e-17L);

    const auto sine = latsum::adaptive_simpson(
        [](long double x) { return std::sin(x); }, 0.0L,
        3.14159265358979323846264338328L, 1e-16L, 0.0L);
    CHECK_LT(rel_diff(sine.value, 2.0L), 1e-14L);
    CHECK_LT(sine.error, 2e-15L);

    // A jump discontinuity defeats any polynomial rule; the integrator must
    // report that instead of returning a confident wrong answer.
    CHECK_THROWS_AS(latsum::adaptive_simpson(
                        [](long double x) { return x < 1.0L / 3.0L ? 0.0L : 1.0L; },
                        0.0L, 1.0L, 1e-25L, 0.0L),
                    latsum::ToleranceError);
}
