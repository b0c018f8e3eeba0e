#pragma once

#include <vector>

#include "latsum/accuracy.hpp"

namespace latsum {

struct CasimirTerm {
    int p = 0;
    int j = 0;
    long double value = 0.0L;
};

// E_d with its per-(p, j) term decomposition, in units of 1/L.
struct CasimirBreakdown {
    int d = 1;
    std::vector<CasimirTerm> terms;
    long double energy = 0.0L;
};

// Closed form for the d-dimensional Neumann Casimir energy:
//   E_d = -(1 / (pi 2^{d+1})) sum_{p=1}^{d} sum_{j=0}^{p-1}
//            binom(d, p) Gamma((j+2)/2) pi^{-j/2} zeta(j+2).
CasimirBreakdown casimir_closed_form(int d);

// Regularized vacuum energy with boundaries, per 1/L:
//   H_d(lambda) = (pi / 2^{d+1}) sum_p binom(d, p) (-d xi_p / dlambda).
long double regularized_with_boundaries(int d, long double lambda,
                                        const Accuracy& acc);

// Regularized vacuum energy without boundaries, per 1/L:
//   G_d(lambda) = (pi / 2^{d+1}) sum_p binom(d, p) p I_p(lambda) / lambda.
long double regularized_without_boundaries(int d, long double lambda);

// E_d as the lambda -> 0 limit of
//   F(lambda) = -(pi / 2^{d+1}) sum_p binom(d, p) dC_p/dlambda,
// Richardson-extrapolated in lambda^2 over the given decreasing grid
// (the small-lambda expansion of chi is even in lambda, so F - E_d is
// exactly O(lambda^2)).
long double casimir_via_limit(int d, const std::vector<long double>& lambdas,
                              const Accuracy& acc);

// Direct regularized mode sum over nonnegative mode vectors, per 1/L:
//   (pi / 2) sum_{n >= 1} rho_d(n) sqrt(n) e^{-lambda sqrt(n)}.
long double neumann_mode_sum(int d, long double lambda, const Accuracy& acc);

// Default grid for casimir_via_limit.
std::vector<long double> default_limit_grid();

} // namespace latsum
