#include "latsum/validation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latsum/analytic_core.hpp"
#include "latsum/casimir.hpp"
#include "latsum/em_validation.hpp"
#include "latsum/lattice_oracle.hpp"
#include "latsum/quadrature.hpp"
#include "latsum/special_functions.hpp"

namespace latsum {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338328L;

void push(std::vector<CheckResult>& out, std::string name, long double measured,
          long double threshold) {
    out.push_back({std::move(name), measured <= threshold, measured, threshold});
}

long double rel_err(long double a, long double b) {
    return std::fabs(a - b) / std::fabs(b);
}

long double coth(long double x) {
    return 1.0L / std::tanh(x);
}

long double chi0_closed(long double lambda) {
    return (coth(0.5L * lambda) - 2.0L / lambda) / (4.0L * lambda);
}

long double chi2_closed(long double lambda) {
    const long double s = std::sinh(0.5L * lambda);
    return 1.0L / (16.0L * lambda * lambda * s * s) +
           coth(0.5L * lambda) / (8.0L * lambda * lambda * lambda) -
           1.0L / (2.0L * lambda * lambda * lambda * lambda);
}

long double geometric_regulator(long double lambda) {
    return 2.0L / std::expm1(lambda);
}

} // namespace

long double bessel_sum_identity_residual(long double lambda) {
    if (!(lambda > 0.0L))
        throw std::domain_error(
            "bessel_sum_identity_residual: lambda must be positive");
    long double lhs = 0.0L, comp = 0.0L;
    for (long long n = 1;; ++n) {
        const long double term = bessel_k0(lambda * (long double)n);
        const long double y = term - comp;
        const long double next = lhs + y;
        comp = (next - lhs) - y;
        lhs = next;
        if (term < 1e-18L)
            break;
        if (n > 2'000'000LL)
            throw ToleranceError(
                "bessel_sum_identity_residual: sum did not converge");
    }
    long double msum = 0.0L, mcomp = 0.0L;
    const int m_cut = 300000;
    for (int m = 1; m <= m_cut; ++m) {
        const long double t = (long double)m;
        const long double term =
            1.0L / std::sqrt(lambda * lambda + 4.0L * t * t * pi_l * pi_l) -
            1.0L / (2.0L * t * pi_l);
        const long double y = term - mcomp;
        const long double next = msum + y;
        mcomp = (next - msum) - y;
        msum = next;
    }
    const long double rhs = 0.5L * (euler_gamma + std::log(lambda / (4.0L * pi_l))) +
                            pi_l / (2.0L * lambda) + pi_l * msum;
    return std::fabs(lhs - rhs);
}

std::vector<CheckResult> run_validation() {
    std::vector<CheckResult> out;
    const Accuracy acc;

    {
        long double worst = 0.0L;
        for (int n = 2; n <= 8; ++n)
            for (int i = 0; i <= 10; ++i) {
                const long double x = 0.1L * i;
                const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
                worst = std::max(worst,
                                 std::fabs(bernoulli_periodic(n, 1.0L - x) -
                                            sign * bernoulli_periodic(n, x)));
            }
        push(out, "bernoulli_reflection", worst, 1e-15L);
    }
    {
        long double worst = 0.0L;
        const long double h = 1e-6L;
        for (int n = 3; n <= 8; ++n)
            for (long double x : {0.2L, 0.5L, 0.8L}) {
                const long double fd = (bernoulli_periodic(n, x + h) -
                                        bernoulli_periodic(n, x - h)) /
                                       (2.0L * h);
                worst = std::max(worst,
                                 std::fabs(fd - (long double)n *
                                                     bernoulli_periodic(n - 1, x)));
            }
        push(out, "bernoulli_derivative", worst, 1e-8L);
    }
    push(out, "zeta_tail_limit", std::fabs(zeta_int(30) - 1.0L), 1e-9L);
    push(out, "zeta_odd_value",
         rel_err(zeta_int(3), 1.2020569031595942854L), 1e-15L);
    {
        long double worst = 0.0L;
        worst = std::max(worst, rel_err(bessel_k0(0.1L),
                                        2.427069024702016612519L));
        worst = std::max(worst, rel_err(bessel_k0(1.0L),
                                        0.4210244382407083333356L));
        worst = std::max(worst, rel_err(bessel_k0(2.0L),
                                        0.1138938727495334356527L));
        push(out, "k0_reference_values", worst, 1e-15L);
    }
    {
        long double worst = 0.0L;
        for (long double x : {0.5L, 3.0L}) {
            const auto integrand = [x](long double t) {
                return std::exp(-x * std::cosh(t));
            };
            const long double cut = std::acosh(1.0L + 50.0L / x);
            const QuadResult quad =
                adaptive_simpson(integrand, 0.0L, cut, 1e-18L, 1e-13L);
            worst = std::max(worst, rel_err(quad.value, bessel_k0(x)));
        }
        push(out, "k0_cosh_quadrature", worst, 1e-10L);
    }
    {
        long double worst = 0.0L;
        long double prev = bessel_k0(0.2L);
        for (int i = 1; i <= 60; ++i) {
            const long double cur = bessel_k0(0.2L + 0.25L * i);
            worst = std::max(worst, cur - prev);
            prev = cur;
        }
        push(out, "k0_monotone_decreasing", worst, 0.0L);
    }
    {
        long double worst = 0.0L;
        for (long double lambda : {0.5L, 1.0L, 5.0L, 10.0L})
            worst = std::max(worst, rel_err(chi_direct(0, lambda, acc).value,
                                            chi0_closed(lambda)));
        push(out, "chi_closed_form_j0", worst, 1e-13L);
    }
    {
        long double worst = 0.0L;
        for (long double lambda : {1.0L, 5.0L, 10.0L})
            worst = std::max(worst, rel_err(chi_direct(2, lambda, acc).value,
                                            chi2_closed(lambda)));
        push(out, "chi_closed_form_j2", worst, 1e-12L);
    }
    {
        long double worst = 0.0L;
        for (int j = 0; j <= 5; ++j)
            for (long double lambda : {0.1L, 1.0L, 3.0L, 6.0L})
                worst = std::max(
                    worst, rel_err(chi_power_series(j, lambda, acc).value,
                                   chi_direct(j, lambda, acc).value));
        push(out, "chi_series_vs_direct", worst, 1e-12L);
    }
    {
        long double worst = 0.0L;
        for (int j = 0; j <= 5; ++j) {
            const long double limit =
                zeta_int(j + 2) * std::pow(2.0L * pi_l, -(long double)(j + 2));
            worst = std::max(worst,
                             rel_err(chi_direct(j, 1e-6L, acc).value, limit));
        }
        push(out, "chi_small_lambda_limit", worst, 1e-9L);
    }
    {
        const long double lambda = 1000.0L;
        const long double asym = 3.0L / 32.0L / std::pow(lambda, 5.0L) -
                                 0.5L / std::pow(lambda, 6.0L);
        push(out, "chi_large_lambda_asymptote",
             rel_err(chi_direct(4, lambda, acc).value, asym), 1e-10L);
    }
    {
        long double worst = 0.0L;
        for (long double lambda : {0.5L, 1.0L, 2.0L, 10.0L})
            worst = std::max(worst, rel_err(c_term(1, lambda, acc),
                                            coth(0.5L * lambda) - 2.0L / lambda));
        push(out, "c1_closed_form", worst, 1e-13L);
    }
    {
        long double worst = 0.0L;
        for (long double lambda : {0.5L, 1.0L, 2.0L, 5.0L, 10.0L}) {
            EvalConfig cfg;
            cfg.lambda = lambda;
            worst = std::max(worst, rel_err(xi_formula(cfg).xi,
                                            geometric_regulator(lambda)));
        }
        push(out, "xi_d1_exact", worst, 1e-12L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 6; ++d)
            for (long double lambda : {0.5L, 1.0L, 3.0L}) {
                long double tele = 0.0L;
                for (int j = 0; j < d; ++j)
                    tele += lambda_j(j, lambda, acc).value;
                const long double direct = i_term(d, lambda) - 1.0L +
                                           c_term(d, lambda, acc);
                worst = std::max(worst, rel_err(tele, direct));
            }
        push(out, "lambda_j_telescoping", worst, 1e-11L);
    }
    {
        long double worst = 0.0L;
        for (long double lambda : {0.5L, 1.0L, 5.0L})
            worst = std::max(worst, rel_err(lambda_j(0, lambda, acc).value,
                                            geometric_regulator(lambda)));
        push(out, "lambda_0_closed_form", worst, 1e-13L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 5; ++d) {
            long double prev = 0.0L;
            bool first = true;
            for (long double lambda : {0.3L, 0.5L, 1.0L, 2.0L, 4.0L, 8.0L}) {
                EvalConfig cfg;
                cfg.d = d;
                cfg.lambda = lambda;
                const long double xi = xi_formula(cfg).xi;
                if (!first)
                    worst = std::max(worst, xi - prev);
                prev = xi;
                first = false;
            }
        }
        push(out, "xi_lambda_monotone", worst, 0.0L);
    }
    {
        long double worst = 0.0L;
        for (int d = 2; d <= 5; ++d) {
            for (long double lambda : {0.3L, 0.5L, 1.0L}) {
                const long double ratio = c_term(d, lambda, acc) /
                                          i_term(d, lambda);
                worst = std::max(worst, ratio - 1.0L);
            }
            for (long double lambda : {5.0L, 8.0L, 10.0L}) {
                const long double ratio = c_term(d, lambda, acc) /
                                          i_term(d, lambda);
                worst = std::max(worst, 1.0L - ratio);
            }
        }
        push(out, "c_over_i_crossover", worst, 0.0L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 5; ++d)
            worst = std::max(worst, c_term(d, 1e-6L, acc));
        push(out, "c_term_small_lambda", worst, 1e-5L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 5; ++d)
            worst = std::max(worst, std::fabs(c_term(d, 1000.0L, acc) - 1.0L));
        push(out, "c_term_large_lambda", worst, 0.02L);
    }
    {
        long double mismatches = 0.0L;
        for (int d = 1; d <= 5; ++d) {
            const RdTable conv = rd_table_convolution(d, 500);
            const RdTable enumd = rd_table_enumeration(d, 500);
            for (long long n = 0; n <= 500; ++n)
                if (conv.counts[n] != enumd.counts[n])
                    mismatches += 1.0L;
        }
        push(out, "rd_convolution_vs_enumeration", mismatches, 0.0L);
    }
    {
        long double mismatches = 0.0L;
        if (rd_table_convolution(2, 25).counts[25] != 12)
            mismatches += 1.0L;
        if (rd_table_convolution(3, 1).counts[1] != 6)
            mismatches += 1.0L;
        if (rd_table_convolution(4, 4).counts[4] != 24)
            mismatches += 1.0L;
        if (rd_table_convolution(1, 4).counts[4] != 2)
            mismatches += 1.0L;
        if (rd_table_convolution(5, 0).counts[0] != 1)
            mismatches += 1.0L;
        push(out, "rd_spot_values", mismatches, 0.0L);
    }
    {
        long double mismatches = 0.0L;
        for (int d = 1; d <= 4; ++d) {
            const RdTable table = rd_table_convolution(d, 400);
            std::uint64_t total = 0;
            for (long long n = 0; n <= 400; ++n)
                total += table.counts[n];
            if (total != ball_point_count(d, 400))
                mismatches += 1.0L;
        }
        push(out, "ball_count_vs_table", mismatches, 0.0L);
    }
    push(out, "average_order_gauss",
         std::fabs(average_order_check(1'000'000) - pi_l), 3e-3L);
    {
        EvalConfig cfg;
        cfg.d = 2;
        cfg.lambda = 1.0L;
        cfg.accuracy.eps_rel = 1e-10L;
        const BruteSumResult res = xi_brute(cfg, 0);
        const RdTable bigger = rd_table_convolution(2, 2 * res.n_cut);
        const BruteSumResult res2 = xi_brute_from_table(bigger, cfg, 0);
        push(out, "brute_tail_bound_holds",
             std::fabs(res.value - res2.value) / res.tail_bound, 1.0L);
    }
    {
        const std::vector<ComparisonRow> rows =
            compare({2, 3}, {1.0L, 5.0L, 10.0L}, acc);
        long double worst = 0.0L;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].d == rows[i - 1].d)
                worst = std::max(worst, rows[i - 1].pct_diff - rows[i].pct_diff);
        push(out, "comparison_pct_monotone", worst, 0.0L);
    }
    {
        long double worst_energy = -1e30L;
        long double bad_terms = 0.0L;
        for (int d = 1; d <= 10; ++d) {
            const CasimirBreakdown cb = casimir_closed_form(d);
            worst_energy = std::max(worst_energy, cb.energy);
            for (const CasimirTerm& t : cb.terms)
                if (!(t.value > 0.0L))
                    bad_terms += 1.0L;
        }
        push(out, "casimir_energy_negative", worst_energy, -0.1L);
        push(out, "casimir_terms_positive", bad_terms, 0.0L);
    }
    push(out, "casimir_d2_identity",
         std::fabs(casimir_closed_form(2).energy +
                    (pi_l * pi_l + zeta_int(3)) / (16.0L * pi_l)),
         1e-15L);
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 3; ++d)
            worst = std::max(
                worst, std::fabs(casimir_via_limit(d, default_limit_grid(), acc) -
                                  casimir_closed_form(d).energy));
        push(out, "casimir_via_limit_matches", worst, 1e-6L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 4; ++d) {
            const long double hg = regularized_with_boundaries(d, 0.02L, acc) -
                                   regularized_without_boundaries(d, 0.02L);
            worst = std::max(worst,
                             std::fabs(hg - casimir_closed_form(d).energy));
        }
        push(out, "casimir_h_minus_g_near_limit", worst, 1e-3L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 4; ++d) {
            const long double lambda = 0.5L;
            const long double hg = regularized_with_boundaries(d, lambda, acc) -
                                   regularized_without_boundaries(d, lambda);
            long double f = 0.0L;
            for (int p = 1; p <= d; ++p) {
                long double bin = 1.0L;
                for (int i = 1; i <= p; ++i)
                    bin *= (long double)(d - p + i) / (long double)i;
                f += bin * c_term_derivative(p, lambda, acc);
            }
            f *= -pi_l / std::pow(2.0L, (long double)(d + 1));
            worst = std::max(worst, std::fabs(hg - f) / std::fabs(f));
        }
        push(out, "operator_identity_h_g_f", worst, 1e-8L);
    }
    {
        Accuracy loose;
        loose.eps_rel = 1e-10L;
        const long double mode = neumann_mode_sum(2, 0.5L, loose);
        const long double h = regularized_with_boundaries(2, 0.5L, acc);
        push(out, "mode_sum_vs_h", rel_err(mode, h), 1e-4L);
    }
    {
        const RemainderCheck r1 = remainder_direct(1, 1.0L, 1.0L);
        const RemainderCheck r2 = remainder_direct(2, 1.0L, 1.0L);
        push(out, "remainder_q_independent", std::fabs(r1.value - r2.value),
             1e-6L);
        push(out, "remainder_dual_route",
             std::fabs(r1.value - remainder_reference(1.0L, 1.0L)), 1e-6L);
    }
    {
        const std::vector<long double> odd =
            odd_derivatives_vanish(1.0L, 1.0L, {3, 5});
        long double worst = 0.0L;
        for (long double v : odd)
            worst = std::max(worst, std::fabs(v));
        push(out, "odd_derivatives_tiny", worst, 1e-6L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 5; ++d)
            worst = std::max(worst,
                             rel_err(i_term_quadrature(d, 1.0L), i_term(d, 1.0L)));
        push(out, "i_term_quadrature_agrees", worst, 1e-8L);
    }
    {
        long double worst = 0.0L;
        for (int d = 1; d <= 10; ++d)
            worst = std::max(worst, gamma_identity_residual(d));
        push(out, "gamma_duplication", worst, 1e-13L);
    }
    {
        long double worst = 0.0L;
        for (int k = 0; k <= 6; ++k)
            worst = std::max(worst, angular_integral_residual(k));
        push(out, "angular_integrals", worst, 1e-10L);
    }
    {
        long double worst = 0.0L;
        for (long double lambda : {0.5L, 1.0L, 2.0L})
            worst = std::max(worst, bessel_sum_identity_residual(lambda));
        push(out, "bessel_sum_identity", worst, 1e-10L);
    }
    {
        long double bad = 0.0L;
        try {
            EvalConfig cfg;
            cfg.d = 6;
            cfg.lambda = 0.01L;
            cfg.validate();
            bad += 1.0L;
        } catch (const std::domain_error&) {
        }
        try {
            EvalConfig cfg;
            cfg.d = 0;
            cfg.validate();
            bad += 1.0L;
        } catch (const std::domain_error&) {
        }
        try {
            EvalConfig cfg;
            cfg.lambda = -1.0L;
            cfg.validate();
            bad += 1.0L;
        } catch (const std::domain_error&) {
        }
        try {
            Accuracy a;
            a.eps_rel = 2.0L;
            a.validate();
            bad += 1.0L;
        } catch (const std::domain_error&) {
        }
        try {
            chi_power_series(0, 2.0L * pi_l, acc);
            bad += 1.0L;
        } catch (const std::domain_error&) {
        }
        push(out, "domain_guards_reject", bad, 0.0L);
    }
    return out;
}

} // namespace latsum
