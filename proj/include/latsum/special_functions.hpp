#pragma once

#include "latsum/accuracy.hpp"

namespace latsum {

// Euler-Mascheroni constant to 20 digits.
inline constexpr long double euler_gamma = 0.57721566490153286061L;

// Modified Bessel function of the second kind, K_0(x), for x > 0.
// Ascending series for x <= 2; for x > 2 a minimax rational approximation
// of sqrt(x) e^x K_0(x). Relative error below 1e-13 across [1e-3, 700];
// returns 0 once e^{-x} underflows.
long double bessel_k0(long double x);

// Riemann zeta at integer arguments s >= 2. Even s <= 20 use the exact
// Bernoulli-number closed forms zeta(2k) = (2 pi)^{2k} |B_{2k}| / (2 (2k)!);
// every other s is a direct sum with an Euler-Maclaurin tail correction.
long double zeta_int(int s);

// Gamma(two_a / 2) for positive integer two_a, built by the recurrence
// Gamma(z + 1) = z Gamma(z) from Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.
// Exact to rounding; no general-purpose gamma approximation is involved.
long double gamma_half(int two_a);

// Bernoulli polynomial B_n(x) for n in 2..8 and x in [0, 1], evaluated
// from its exact rational coefficients.
long double bernoulli_periodic(int n, long double x);

} // namespace latsum
