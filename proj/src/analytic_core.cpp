#include "latsum/analytic_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "latsum/special_functions.hpp"

namespace latsum {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338328L;

// J_k(T) = int_T^inf (1 + u^2)^{-k/2} du, k >= 2. For T >= 8 the binomial
// expansion of (1 + u^{-2})^{-k/2} gives
//   J_k(T) = sum_n binom(-k/2, n) T^{1-k-2n} / (k + 2n - 1),
// which converges geometrically with ratio ~ T^{-2}. For smaller T,
// integrate by parts:
//   J_k = [ -T (1 + T^2)^{-(k-2)/2} + (k - 3) J_{k-2} ] / (k - 2),
// a stride-two recurrence seeded by the matching parity,
//   J_2(T) = atan(1/T),   J_3(T) = 1 / (r (r + T)),  r = sqrt(1 + T^2).
long double decay_tail_integral(int k, long double t) {
    if (t >= 8.0L) {
        long double coef = 1.0L;
        long double tpow = std::pow(t, 1.0L - (long double)k);
        const long double inv_t2 = 1.0L / (t * t);
        long double sum = 0.0L;
        for (int n = 0; n < 200; ++n) {
            const long double term =
                coef * tpow / ((long double)k + 2.0L * n - 1.0L);
            sum += term;
            if (std::fabs(term) < 1e-22L * std::fabs(sum))
                break;
            coef *= (-0.5L * (long double)k - n) / (n + 1.0L);
            tpow *= inv_t2;
        }
        return sum;
    }
    const long double r2 = 1.0L + t * t;
    long double j;
    int kk;
    if (k % 2 == 0) {
        j = std::atan(1.0L / t);
        kk = 2;
    } else {
        const long double r = std::sqrt(r2);
        j = 1.0L / (r * (r + t));
        kk = 3;
    }
    while (kk < k) {
        kk += 2;
        j = (-t * std::pow(r2, -0.5L * (kk - 2)) + (long double)(kk - 3) * j) /
            (long double)(kk - 2);
    }
    return j;
}

// Derivatives of g(t) = (c + b t^2)^{-s} via the polynomial recurrence
//   Q_0 = 1,   Q_{n+1} = (c + b t^2) Q_n' - 2 b (s + n) t Q_n,
// so that g^{(n)}(t) = Q_n(t) (c + b t^2)^{-s-n}.
std::vector<long double> next_derivative_poly(const std::vector<long double>& q,
                                              long double b, long double c,
                                              long double s, int n) {
    std::vector<long double> out(q.size() + 1, 0.0L);
    for (std::size_t i = 1; i < q.size(); ++i) {
        const long double dp = (long double)i * q[i];
        out[i - 1] += c * dp;
        out[i + 1] += b * dp;
    }
    const long double w = 2.0L * b * (s + (long double)n);
    for (std::size_t i = 0; i < q.size(); ++i)
        out[i + 1] -= w * q[i];
    return out;
}

long double eval_poly_vec(const std::vector<long double>& q, long double t) {
    long double acc = 0.0L;
    for (std::size_t i = q.size(); i > 0; --i)
        acc = acc * t + q[i - 1];
    return acc;
}

void check_lambda(long double lambda, const char* who) {
    if (!(lambda > 0.0L) || !std::isfinite(lambda))
        throw std::domain_error(std::string(who) +
                                ": lambda must be positive and finite");
}

long double c_coefficient(int j) {
    return std::pow(2.0L, (long double)(j + 2)) * gamma_half(j + 2) *
           std::pow(pi_l, 0.5L * (long double)j);
}

} // namespace

void EvalConfig::validate() const {
    if (d < 1 || d > 10)
        throw std::domain_error("EvalConfig: d must be in 1..10");
    check_lambda(lambda, "EvalConfig");
    if (d >= 6 && lambda <= 0.05L)
        throw std::domain_error(
            "EvalConfig: lambda <= 0.05 with d >= 6 is outside the supported range");
    accuracy.validate();
}

ChiValue chi_direct(int j, long double lambda, const Accuracy& acc) {
    acc.validate();
    if (j < 0)
        throw std::domain_error("chi_direct: j must be nonnegative");
    check_lambda(lambda, "chi_direct");
    const long double b = 4.0L * pi_l * pi_l;
    const long double c = lambda * lambda;
    const long double s = 0.5L * (long double)(j + 2);
    // Drive the remainder to full working precision regardless of the
    // requested tolerance; the corrected tail makes that nearly free.
    const long double eps_eff = std::min(acc.eps_rel, 1e-17L);
    std::size_t m_cut = std::max<std::size_t>(
        16, (std::size_t)std::ceil(0.4L * lambda));
    for (;;) {
        if (m_cut > acc.max_terms)
            throw ToleranceError(
                "chi_direct: tail bound not met within max_terms");
        long double sum = 0.0L, comp = 0.0L;
        for (std::size_t m = 1; m <= m_cut; ++m) {
            const long double t = (long double)m;
            const long double g = std::pow(c + b * t * t, -s);
            const long double y = g - comp;
            const long double next = sum + y;
            comp = (next - sum) - y;
            sum = next;
        }
        const long double a = (long double)(m_cut + 1);
        const long double big_t = 2.0L * pi_l * a / lambda;
        const long double integral =
            std::pow(lambda, -(long double)(j + 1)) / (2.0L * pi_l) *
            decay_tail_integral(j + 2, big_t);
        const long double base = c + b * a * a;
        std::vector<long double> q = {1.0L};
        long double d1 = 0.0L, d3 = 0.0L, d5 = 0.0L;
        for (int n = 0; n < 5; ++n) {
            q = next_derivative_poly(q, b, c, s, n);
            const long double g_n =
                eval_poly_vec(q, a) * std::pow(base, -s - (long double)(n + 1));
            if (n == 0)
                d1 = g_n;
            else if (n == 2)
                d3 = g_n;
            else if (n == 4)
                d5 = g_n;
        }
        const long double g_a = std::pow(base, -s);
        const long double tail =
            integral + 0.5L * g_a - d1 / 12.0L + d3 / 720.0L;
        const long double bound = 2.0L * std::fabs(d5) / 30240.0L;
        const long double value = sum + tail;
        // The gate on 2 pi a / lambda keeps the correction terms in the
        // regime where successive derivative terms actually shrink.
        if (bound <= eps_eff * value && big_t >= 2.5L)
            return {j, lambda, value, m_cut, bound};
        m_cut *= 2;
    }
}

ChiValue chi_power_series(int j, long double lambda, const Accuracy& acc) {
    acc.validate();
    if (j < 0)
        throw std::domain_error("chi_power_series: j must be nonnegative");
    check_lambda(lambda, "chi_power_series");
    if (lambda >= 2.0L * pi_l)
        throw std::domain_error(
            "chi_power_series: requires lambda < 2 pi");
    const long double x = lambda * lambda / (4.0L * pi_l * pi_l);
    long double t = 1.0L; // (-x)^n / n! * prod_{i<=n} (i + j/2)
    long double sum = 0.0L, comp = 0.0L;
    long double bound = 0.0L;
    std::size_t used = 0;
    for (;;) {
        const long double term =
            t * zeta_int((int)(j + 2 + 2 * used));
        const long double y = term - comp;
        const long double next = sum + y;
        comp = (next - sum) - y;
        sum = next;
        ++used;
        // Ratio of consecutive term magnitudes, an upper bound because the
        // zeta factors decrease toward 1; it also decreases with n, so once
        // it drops below 1 the series is alternating with shrinking terms
        // and the next term bounds the tail.
        const long double ratio =
            x * ((long double)used + 0.5L * (long double)j) / (long double)used;
        bound = std::fabs(term) * ratio;
        if (ratio < 1.0L && bound <= acc.eps_rel * std::fabs(sum))
            break;
        if (used >= acc.max_terms)
            throw ToleranceError(
                "chi_power_series: no convergence within max_terms");
        t *= -x * ((long double)used + 0.5L * (long double)j) /
             (long double)used;
    }
    const long double scale = std::pow(2.0L * pi_l, -(long double)(j + 2));
    return {j, lambda, scale * sum, used, scale * bound};
}

ChiValue chi(int j, long double lambda, const Accuracy& acc, ChiMode mode) {
    return mode == ChiMode::direct ? chi_direct(j, lambda, acc)
                                   : chi_power_series(j, lambda, acc);
}

long double i_term(int d, long double lambda) {
    if (d < 1)
        throw std::domain_error("i_term: d must be at least 1");
    check_lambda(lambda, "i_term");
    const long double v = std::pow(2.0L, (long double)d) *
                          std::pow(pi_l, 0.5L * (long double)(d - 1)) *
                          gamma_half(d + 1) / std::pow(lambda, (long double)d);
    if (!std::isfinite(v))
        throw std::overflow_error("i_term: result overflows");
    return v;
}

long double c_term(int d, long double lambda, const Accuracy& acc,
                   ChiMode mode) {
    if (d < 1)
        throw std::domain_error("c_term: d must be at least 1");
    check_lambda(lambda, "c_term");
    long double sum = 0.0L;
    for (int j = 0; j < d; ++j)
        sum += c_coefficient(j) * chi(j, lambda, acc, mode).value;
    return lambda * sum;
}

LambdaJValue lambda_j(int j, long double lambda, const Accuracy& acc) {
    if (j < 0)
        throw std::domain_error("lambda_j: j must be nonnegative");
    check_lambda(lambda, "lambda_j");
    const long double a =
        -std::pow(lambda, -(long double)j) * std::pow(2.0L, (long double)j) *
        std::pow(pi_l, 0.5L * (long double)(j - 1)) * gamma_half(j + 1);
    const long double b = std::pow(lambda, -(long double)(j + 1)) *
                          std::pow(2.0L, (long double)(j + 1)) *
                          std::pow(pi_l, 0.5L * (long double)j) *
                          gamma_half(j + 2);
    const long double c =
        lambda * c_coefficient(j) * chi_direct(j, lambda, acc).value;
    return {j, lambda, a + b + c};
}

XiBreakdown xi_formula(const EvalConfig& config, ChiMode mode) {
    config.validate();
    XiBreakdown out;
    out.config = config;
    out.method =
        mode == ChiMode::direct ? Method::direct_chi : Method::power_series;
    out.i_term = i_term(config.d, config.lambda);
    out.c_term = c_term(config.d, config.lambda, config.accuracy, mode);
    out.xi = out.i_term - 1.0L + out.c_term;
    if (!(out.xi > 0.0L))
        throw ToleranceError(
            "xi_formula: cancellation between I - 1 and C left no "
            "significant digits");
    return out;
}

long double xi_derivative(const EvalConfig& config) {
    config.validate();
    return (long double)config.d * i_term(config.d, config.lambda) /
               config.lambda -
           c_term_derivative(config.d, config.lambda, config.accuracy);
}

long double c_term_derivative(int d, long double lambda, const Accuracy& acc) {
    if (d < 1)
        throw std::domain_error("c_term_derivative: d must be at least 1");
    check_lambda(lambda, "c_term_derivative");
    long double sum = 0.0L;
    for (int j = 0; j < d; ++j) {
        const long double cj = chi_direct(j, lambda, acc).value;
        const long double cj2 = chi_direct(j + 2, lambda, acc).value;
        sum += c_coefficient(j) *
               (cj - (long double)(j + 2) * lambda * lambda * cj2);
    }
    return sum;
}

long double i_term_derivative(int d, long double lambda) {
    return -(long double)d * i_term(d, lambda) / lambda;
}

} // namespace latsum
