#include "latsum/casimir.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "latsum/analytic_core.hpp"
#include "latsum/lattice_oracle.hpp"
#include "latsum/special_functions.hpp"

namespace latsum {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338328L;

void check_dimension(int d, const char* who) {
    if (d < 1 || d > 10)
        throw std::domain_error(std::string(who) + ": d must be in 1..10");
}

long double binom(int n, int k) {
    long double b = 1.0L;
    for (int i = 1; i <= k; ++i)
        b *= (long double)(n - k + i) / (long double)i;
    return b;
}

} // namespace

CasimirBreakdown casimir_closed_form(int d) {
    check_dimension(d, "casimir_closed_form");
    CasimirBreakdown out;
    out.d = d;
    long double sum = 0.0L;
    for (int p = 1; p <= d; ++p) {
        for (int j = 0; j < p; ++j) {
            const long double term = binom(d, p) * gamma_half(j + 2) *
                                     std::pow(pi_l, -0.5L * (long double)j) *
                                     zeta_int(j + 2);
            out.terms.push_back({p, j, term});
            sum += term;
        }
    }
    out.energy = -sum / (pi_l * std::pow(2.0L, (long double)(d + 1)));
    return out;
}

long double regularized_with_boundaries(int d, long double lambda,
                                        const Accuracy& acc) {
    check_dimension(d, "regularized_with_boundaries");
    long double sum = 0.0L;
    for (int p = 1; p <= d; ++p) {
        EvalConfig cfg;
        cfg.d = p;
        cfg.lambda = lambda;
        cfg.accuracy = acc;
        sum += binom(d, p) * xi_derivative(cfg);
    }
    return pi_l / std::pow(2.0L, (long double)(d + 1)) * sum;
}

long double regularized_without_boundaries(int d, long double lambda) {
    check_dimension(d, "regularized_without_boundaries");
    if (!(lambda > 0.0L))
        throw std::domain_error(
            "regularized_without_boundaries: lambda must be positive");
    long double sum = 0.0L;
    for (int p = 1; p <= d; ++p)
        sum += binom(d, p) * (long double)p * i_term(p, lambda) / lambda;
    return pi_l / std::pow(2.0L, (long double)(d + 1)) * sum;
}

long double casimir_via_limit(int d, const std::vector<long double>& lambdas,
                              const Accuracy& acc) {
    check_dimension(d, "casimir_via_limit");
    acc.validate();
    if (lambdas.size() < 3)
        throw std::domain_error(
            "casimir_via_limit: need at least three grid points");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0.0L && lambdas[i] < 1.0L))
            throw std::domain_error(
                "casimir_via_limit: grid points must lie in (0, 1)");
        if (i > 0 && !(lambdas[i] < lambdas[i - 1]))
            throw std::domain_error(
                "casimir_via_limit: grid must be strictly decreasing");
    }
    // F(lambda) = -(pi / 2^{d+1}) sum_p binom(d, p) dC_p/dlambda tends to
    // E_d with an error that is even in lambda, so extrapolate to zero in
    // x = lambda^2 with Neville's scheme.
    const std::size_t n = lambdas.size();
    std::vector<long double> x(n), t(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = lambdas[i] * lambdas[i];
        long double sum = 0.0L;
        for (int p = 1; p <= d; ++p)
            sum += binom(d, p) * c_term_derivative(p, lambdas[i], acc);
        t[i] = -pi_l / std::pow(2.0L, (long double)(d + 1)) * sum;
    }
    std::vector<long double> estimate;
    estimate.push_back(t[0]);
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i)
            t[i] = (x[i] * t[i + 1] - x[i + m] * t[i]) / (x[i] - x[i + m]);
        estimate.push_back(t[0]);
    }
    // Successive diagonal corrections must contract; if they grow beyond
    // the rounding floor the grid is not in the asymptotic regime.
    for (std::size_t m = 2; m < estimate.size(); ++m) {
        const long double prev = std::fabs(estimate[m - 1] - estimate[m - 2]);
        const long double cur = std::fabs(estimate[m] - estimate[m - 1]);
        if (cur > prev && cur > 1e-14L * std::fabs(estimate[m]))
            throw ToleranceError("casimir_via_limit: extrapolation diverged");
    }
    return t[0];
}

long double neumann_mode_sum(int d, long double lambda, const Accuracy& acc) {
    check_dimension(d, "neumann_mode_sum");
    acc.validate();
    if (!(lambda > 0.0L))
        throw std::domain_error("neumann_mode_sum: lambda must be positive");
    EvalConfig cfg;
    cfg.d = d;
    cfg.lambda = lambda;
    cfg.accuracy = acc;
    cfg.validate();
    long long n_cut =
        (long long)std::ceil((8.0L / lambda) * (8.0L / lambda)) + 10;
    for (;;) {
        if (n_cut > 8'000'000LL)
            throw ToleranceError(
                "neumann_mode_sum: shell cutoff guard exceeded");
        const RdTable table = nonneg_table(d, n_cut);
        // The signed-count tail bound applies a fortiori, since the
        // nonnegative-vector counts are dominated by the signed ones.
        const BruteSumResult res = xi_brute_from_table(table, cfg, 1);
        if (res.tail_bound <= acc.eps_rel * res.value)
            return 0.5L * pi_l * res.value;
        n_cut *= 2;
    }
}

std::vector<long double> default_limit_grid() {
    return {0.08L, 0.04L, 0.02L, 0.01L};
}

} // namespace latsum
