#include "latsum/em_validation.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

#include "latsum/analytic_core.hpp"
#include "latsum/quadrature.hpp"
#include "latsum/special_functions.hpp"

namespace latsum {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338328L;

long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i)
        f *= (long double)i;
    return f;
}

void check_shifted_exponential_args(long double lambda, long double c_shift,
                                    const char* who) {
    if (!(lambda > 0.0L))
        throw std::domain_error(std::string(who) + ": lambda must be positive");
    if (!(c_shift > 0.0L))
        throw std::domain_error(std::string(who) + ": c_shift must be positive");
}

// The function whose Euler-Maclaurin remainder is probed everywhere here.
long double shifted_exponential(long double t, long double lambda,
                                long double c_shift) {
    return std::exp(-lambda * std::sqrt(t * t + c_shift));
}

template <class F>
long double stencil_derivative(const F& f, long double z, int m, long double h) {
    std::vector<long double> xs(9);
    for (int k = 0; k < 9; ++k)
        xs[k] = z + (long double)(k - 4) * h;
    const std::vector<long double> w = fornberg_weights(z, xs, m);
    long double acc = 0.0L;
    for (int k = 0; k < 9; ++k)
        acc += w[k] * f(xs[k]);
    return acc;
}

// One Richardson step on top of the nine-point stencil. The stencil's
// truncation error is O(h^p) with p the usual central-difference order, so
// combining h and 2h cancels the leading term.
template <class F>
long double richardson_derivative(const F& f, long double z, int m,
                                  long double h) {
    const int p = (9 - m) + ((9 - m) % 2);
    const long double scale = std::pow(2.0L, (long double)p);
    const long double fine = stencil_derivative(f, z, m, h);
    const long double coarse = stencil_derivative(f, z, m, 2.0L * h);
    return (scale * fine - coarse) / (scale - 1.0L);
}

} // namespace

std::vector<long double> fornberg_weights(long double z,
                                          const std::vector<long double>& xs,
                                          int m) {
    const int n = (int)xs.size();
    if (m < 0)
        throw std::domain_error("fornberg_weights: order must be nonnegative");
    if (n < m + 1)
        throw std::domain_error(
            "fornberg_weights: need at least m + 1 distinct nodes");
    std::vector<std::vector<long double>> c(
        m + 1, std::vector<long double>(n, 0.0L));
    long double c1 = 1.0L;
    long double c4 = xs[0] - z;
    c[0][0] = 1.0L;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        long double c2 = 1.0L;
        const long double c5 = c4;
        c4 = xs[i] - z;
        for (int j = 0; j < i; ++j) {
            const long double c3 = xs[i] - xs[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] =
                        c1 * ((long double)k * c[k - 1][i - 1] - c5 * c[k][i - 1]) /
                        c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - (long double)k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c[m];
}

RemainderCheck remainder_direct(int q, long double lambda, long double c_shift) {
    if (q < 1 || q > 4)
        throw std::domain_error("remainder_direct: q must be in 1..4");
    check_shifted_exponential_args(lambda, c_shift, "remainder_direct");
    const int m = 2 * q;
    const long double h = std::pow((long double)LDBL_EPSILON,
                                    1.0L / (long double)(m + 4));
    const long long nu_max = (long long)std::ceil(40.0L / lambda);
    if (nu_max > 4000)
        throw GuardError("remainder_direct: lambda too small for the shifted sum");
    const auto f = [lambda, c_shift](long double t) {
        return shifted_exponential(t, lambda, c_shift);
    };
    const auto integrand = [&](long double x) {
        long double acc = 0.0L;
        for (long long nu = 0; nu <= nu_max; ++nu)
            acc += richardson_derivative(f, x + (long double)nu, m, h);
        return bernoulli_periodic(m, x) * acc;
    };
    // The stencil divides rounding noise by h^m, so the integrand carries a
    // noise floor that grows from about 1e-13 at m = 2 to about 1e-6 at
    // m = 8; a tolerance below that floor would make the refinement
    // subdivide forever. These sit ~50x above the floor, and after the
    // 1/(2q)! scale the remainder still comes out well below 1e-7.
    static constexpr long double quad_tol[5] = {0.0L, 5e-12L, 1e-8L, 2.5e-6L,
                                                7e-5L};
    const QuadResult quad =
        adaptive_simpson(integrand, 0.0L, 1.0L, quad_tol[q], 0.0L);
    const long double scale = 1.0L / factorial_ld(m);
    return {q, lambda, c_shift, -scale * quad.value, scale * quad.error};
}

long double remainder_reference(long double lambda, long double c_shift) {
    check_shifted_exponential_args(lambda, c_shift, "remainder_reference");
    const auto f = [lambda, c_shift](long double t) {
        return shifted_exponential(t, lambda, c_shift);
    };
    long double sum = 0.0L, comp = 0.0L;
    for (long long n = 1;; ++n) {
        const long double term = f((long double)n);
        const long double y = term - comp;
        const long double next = sum + y;
        comp = (next - sum) - y;
        sum = next;
        if (term < 1e-22L * sum && n > 8)
            break;
        if (n > 10'000'000LL)
            throw ToleranceError("remainder_reference: sum did not converge");
    }
    const long double cut = 80.0L / lambda + std::sqrt(c_shift);
    const QuadResult integral =
        adaptive_simpson(f, 0.0L, cut, 1e-18L, 1e-15L);
    return sum - integral.value + 0.5L * f(0.0L);
}

std::vector<long double> odd_derivatives_vanish(long double lambda,
                                                long double c_shift,
                                                const std::vector<int>& orders) {
    check_shifted_exponential_args(lambda, c_shift, "odd_derivatives_vanish");
    const auto f = [lambda, c_shift](long double t) {
        return shifted_exponential(t, lambda, c_shift);
    };
    std::vector<long double> out;
    out.reserve(orders.size());
    for (int m : orders) {
        if (m < 1 || m > 8 || m % 2 == 0)
            throw std::domain_error(
                "odd_derivatives_vanish: orders must be odd and at most 8");
        // The summand is even in t, so the antisymmetric central weights
        // cancel exactly; any moderate h works and 0.1 keeps rounding low.
        out.push_back(stencil_derivative(f, 0.0L, m, 0.1L));
    }
    return out;
}

long double i_term_quadrature(int d, long double lambda) {
    if (d < 1 || d > 10)
        throw std::domain_error("i_term_quadrature: d must be in 1..10");
    if (!(lambda > 0.0L))
        throw std::domain_error("i_term_quadrature: lambda must be positive");
    // Radial form of the volume integral: the surface measure of the unit
    // sphere times int_0^inf r^{d-1} e^{-lambda r} dr, truncated where the
    // integrand is far below the tolerance.
    const long double surface =
        2.0L * std::pow(pi_l, 0.5L * (long double)d) / gamma_half(d);
    const long double radial_scale =
        factorial_ld(d - 1) / std::pow(lambda, (long double)d);
    const auto integrand = [d, lambda](long double r) {
        return std::pow(r, (long double)(d - 1)) * std::exp(-lambda * r);
    };
    const long double cut = (60.0L + 10.0L * (long double)d) / lambda;
    const QuadResult quad = adaptive_simpson(integrand, 0.0L, cut,
                                             1e-14L * radial_scale, 1e-13L);
    return surface * quad.value;
}

long double gamma_identity_residual(int d) {
    if (d < 1 || d > 20)
        throw std::domain_error("gamma_identity_residual: d must be in 1..20");
    // Duplication identity behind the volume-term constant:
    //   2^d pi^{(d-1)/2} Gamma((d+1)/2) = 2 pi^{d/2} Gamma(d) / Gamma(d/2).
    const long double lhs = std::pow(2.0L, (long double)d) *
                            std::pow(pi_l, 0.5L * (long double)(d - 1)) *
                            gamma_half(d + 1);
    const long double rhs = 2.0L * std::pow(pi_l, 0.5L * (long double)d) *
                            gamma_half(2 * d) / gamma_half(d);
    return std::fabs(lhs / rhs - 1.0L);
}

long double angular_integral_residual(int k) {
    if (k < 0 || k > 20)
        throw std::domain_error("angular_integral_residual: k must be in 0..20");
    // int_0^pi sin^k theta dtheta = sqrt(pi) Gamma((k+1)/2) / Gamma((k+2)/2).
    const long double closed =
        std::sqrt(pi_l) * gamma_half(k + 1) / gamma_half(k + 2);
    const auto integrand = [k](long double theta) {
        return std::pow(std::sin(theta), (long double)k);
    };
    const QuadResult quad =
        adaptive_simpson(integrand, 0.0L, pi_l, 1e-16L, 1e-13L);
    return std::fabs(quad.value / closed - 1.0L);
}

} // namespace latsum
