#include "latsum/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace latsum {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338328L;

// Rational minimax approximation of sqrt(x) e^x K_0(x) in the variable
// 1/x, valid for x > 1 (Russon and Blair, Chalk River Report AECL-3461).
constexpr std::array<long double, 10> k0_p3 = {
    1.1600249425076035558e+02L, 2.3444738764199315021e+03L,
    1.8321525870183537725e+04L, 7.1557062783764037541e+04L,
    1.5097646353289914539e+05L, 1.7398867902565686251e+05L,
    1.0577068948034021957e+05L, 3.1075408980684392399e+04L,
    3.6832589957340267940e+03L, 1.1394980557384778174e+02L};
constexpr std::array<long double, 11> k0_q3 = {
    9.2556599177304839811e+01L, 1.8821890840982713696e+03L,
    1.4847228371802360957e+04L, 5.8824616785857027752e+04L,
    1.2689839587977598727e+05L, 1.5144644673520157801e+05L,
    9.7418829762268075784e+04L, 3.1474655750295278825e+04L,
    4.4329628889746408858e+03L, 2.0013443064949242491e+02L,
    1.0L};

template <std::size_t N>
long double eval_poly(const std::array<long double, N>& c, long double y) {
    long double acc = c[N - 1];
    for (std::size_t i = N - 1; i > 0; --i)
        acc = acc * y + c[i - 1];
    return acc;
}

// Bernoulli numbers B_2..B_20 as exact rationals.
constexpr std::array<long double, 10> bernoulli_num = {
    1.0L, -1.0L, 1.0L, -1.0L, 5.0L, -691.0L, 7.0L, -3617.0L, 43867.0L,
    -174611.0L};
constexpr std::array<long double, 10> bernoulli_den = {
    6.0L, 30.0L, 42.0L, 30.0L, 66.0L, 2730.0L, 6.0L, 510.0L, 798.0L, 330.0L};

} // namespace

long double bessel_k0(long double x) {
    if (!(x > 0.0L))
        throw std::domain_error("bessel_k0: x must be positive");
    if (x <= 2.0L) {
        // K_0 = -(ln(x/2) + gamma) I_0(x) + sum_{k>=1} (x^2/4)^k H_k / (k!)^2
        const long double y = 0.25L * x * x;
        long double term = 1.0L;   // (x^2/4)^k / (k!)^2
        long double i0 = 1.0L;
        long double hsum = 0.0L;   // harmonic-weighted partial sum
        long double hk = 0.0L;
        for (int k = 1; k <= 60; ++k) {
            term *= y / ((long double)k * k);
            hk += 1.0L / k;
            i0 += term;
            hsum += term * hk;
            if (term * (hk + 1.0L) < 1e-22L * (i0 + hsum))
                break;
        }
        return -(std::log(0.5L * x) + euler_gamma) * i0 + hsum;
    }
    const long double y = 1.0L / x;
    const long double r = eval_poly(k0_p3, y) / eval_poly(k0_q3, y);
    return std::exp(-x) / std::sqrt(x) * r;
}

long double zeta_int(int s) {
    if (s < 2)
        throw std::domain_error("zeta_int: s must be >= 2");
    if (s % 2 == 0 && s <= 20) {
        // zeta(2k) = (2 pi)^{2k} |B_{2k}| / (2 (2k)!)
        const int k = s / 2;
        long double fact = 1.0L;
        for (int i = 2; i <= s; ++i)
            fact *= i;
        const long double b = bernoulli_num[k - 1] / bernoulli_den[k - 1];
        return std::pow(2.0L * pi_l, s) * std::fabs(b) / (2.0L * fact);
    }
    if (s > 64)
        return 1.0L + std::pow(2.0L, -s) + std::pow(3.0L, -s);
    // Direct sum to M with the Euler-Maclaurin tail at a = M + 1:
    //   a^{1-s}/(s-1) + a^{-s}/2 + s a^{-s-1}/12
    //   - s(s+1)(s+2) a^{-s-3}/720 + s...(s+4) a^{-s-5}/30240
    //   - s...(s+6) a^{-s-7}/1209600
    // The worst case is s = 3, where the first neglected correction is
    // ~0.4 a^{-12}; M = 50 puts that near 1e-21.
    const int M = 50;
    long double sum = 0.0L, comp = 0.0L;
    for (int m = 1; m <= M; ++m) {
        const long double t = std::pow((long double)m, -(long double)s);
        const long double yk = t - comp;
        const long double tk = sum + yk;
        comp = (tk - sum) - yk;
        sum = tk;
    }
    const long double a = (long double)(M + 1);
    const long double sl = (long double)s;
    const long double apow = std::pow(a, -sl);
    long double tail = apow * a / (sl - 1.0L) + 0.5L * apow +
                       sl * apow / a / 12.0L;
    tail -= sl * (sl + 1.0L) * (sl + 2.0L) * apow / (a * a * a) / 720.0L;
    tail += sl * (sl + 1.0L) * (sl + 2.0L) * (sl + 3.0L) * (sl + 4.0L) * apow /
            (a * a * a * a * a) / 30240.0L;
    tail -= sl * (sl + 1.0L) * (sl + 2.0L) * (sl + 3.0L) * (sl + 4.0L) *
            (sl + 5.0L) * (sl + 6.0L) * apow /
            (a * a * a * a * a * a * a) / 1209600.0L;
    return sum + tail;
}

long double gamma_half(int two_a) {
    if (two_a <= 0)
        throw std::domain_error("gamma_half: argument must be positive");
    long double value = (two_a % 2 == 0) ? 1.0L : std::sqrt(pi_l);
    for (int t = two_a - 2; t >= 1; t -= 2)
        value *= 0.5L * t;
    return value;
}

long double bernoulli_periodic(int n, long double x) {
    if (n < 2 || n > 8)
        throw std::domain_error("bernoulli_periodic: order must be in 2..8");
    if (!(x >= 0.0L && x <= 1.0L))
        throw std::domain_error("bernoulli_periodic: x must lie in [0, 1]");
    switch (n) {
    case 2: // x^2 - x + 1/6
        return (x - 1.0L) * x + 1.0L / 6.0L;
    case 3: // x^3 - (3/2) x^2 + x/2
        return ((x - 1.5L) * x + 0.5L) * x;
    case 4: // x^4 - 2 x^3 + x^2 - 1/30
        return ((x - 2.0L) * x + 1.0L) * x * x - 1.0L / 30.0L;
    case 5: // x^5 - (5/2) x^4 + (5/3) x^3 - x/6
        return (((x - 2.5L) * x + 5.0L / 3.0L) * x * x - 1.0L / 6.0L) * x;
    case 6: // x^6 - 3 x^5 + (5/2) x^4 - (1/2) x^2 + 1/42
        return (((x - 3.0L) * x + 2.5L) * x * x - 0.5L) * x * x + 1.0L / 42.0L;
    case 7: // x^7 - (7/2) x^6 + (7/2) x^5 - (7/6) x^3 + x/6
        return ((((x - 3.5L) * x + 3.5L) * x * x - 7.0L / 6.0L) * x * x +
                1.0L / 6.0L) *
               x;
    default: // x^8 - 4 x^7 + (14/3) x^6 - (7/3) x^4 + (2/3) x^2 - 1/30
        return ((((x - 4.0L) * x + 14.0L / 3.0L) * x * x - 7.0L / 3.0L) * x * x +
                2.0L / 3.0L) *
                   x * x -
               1.0L / 30.0L;
    }
}

} // namespace latsum
