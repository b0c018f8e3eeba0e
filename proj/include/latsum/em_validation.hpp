#pragma once

#include <vector>

#include "latsum/accuracy.hpp"

namespace latsum {

// One estimate of the neglected Euler-Maclaurin remainder
//   R_q = -(1/(2q)!) int_0^1 B_{2q}(x) sum_{nu>=0} f^{(2q)}(x + nu) dx
// for f(x) = e^{-lambda sqrt(x^2 + C)}; R_q is independent of q for this f.
struct RemainderCheck {
    int q = 1;
    long double lambda = 1.0L;
    long double c_shift = 1.0L;
    long double value = 0.0L;
    long double quad_error = 0.0L;
};

// Finite-difference weights for the m-th derivative at point z from the
// nodes xs (Fornberg's recurrence).
std::vector<long double> fornberg_weights(long double z,
                                          const std::vector<long double>& xs,
                                          int m);

RemainderCheck remainder_direct(int q, long double lambda, long double c_shift);

// The same remainder through an independent route:
//   R = sum_{n>=1} f(n) - int_0^inf f + f(0)/2.
long double remainder_reference(long double lambda, long double c_shift);

// Finite-difference estimates of the odd derivatives f^(order)(0); f is
// even in x, so a symmetric stencil leaves pure rounding noise.
std::vector<long double> odd_derivatives_vanish(long double lambda,
                                                long double c_shift,
                                                const std::vector<int>& orders);

// I_d recomputed as the radial quadrature
//   2 pi^{d/2} / Gamma(d/2) int_0^inf e^{-lambda r} r^{d-1} dr
// (the angular factor in closed form).
long double i_term_quadrature(int d, long double lambda);

// Relative residual of Gamma(d)/Gamma(d/2) = 2^{d-1} Gamma((d+1)/2)/sqrt(pi).
long double gamma_identity_residual(int d);

// Relative residual of int_0^pi sin^k = sqrt(pi) Gamma((k+1)/2)/Gamma((k+2)/2),
// with the left side by quadrature.
long double angular_integral_residual(int k);

} // namespace latsum
