#pragma once

#include <cstddef>

#include "latsum/accuracy.hpp"

namespace latsum {

// Evaluation route for the generating function and its pieces.
enum class Method { direct_chi, power_series, brute };

enum class ChiMode { direct, power_series };

// Dimension d, regulator lambda, and the truncation policy used by every
// series the evaluation touches.
struct EvalConfig {
    int d = 1;
    long double lambda = 1.0L;
    Accuracy accuracy{};

    void validate() const;
};

// One evaluation of chi_j(lambda) = sum_{m>=1} (lambda^2 + 4 m^2 pi^2)^{-(j+2)/2}.
struct ChiValue {
    int j = 0;
    long double lambda = 0.0L;
    long double value = 0.0L;
    std::size_t terms_used = 0;
    long double tail_bound = 0.0L;
};

struct LambdaJValue {
    int j = 0;
    long double lambda = 0.0L;
    long double value = 0.0L;
};

// xi_d(lambda) together with its volume-integral part I_d and correction
// part C_d; xi = i_term - 1 + c_term for the analytic routes.
struct XiBreakdown {
    EvalConfig config{};
    long double i_term = 0.0L;
    long double c_term = 0.0L;
    long double xi = 0.0L;
    Method method = Method::direct_chi;
};

// chi_j by direct summation over m with an Euler-Maclaurin-corrected tail:
// m <= M is summed, then the remainder is replaced by
//   int_a^inf g + g(a)/2 - g'(a)/12 + g'''(a)/720,   a = M + 1,
// whose error is bounded by 2 |g^(5)(a)| / 30240. M doubles until that
// bound is negligible relative to the value.
ChiValue chi_direct(int j, long double lambda, const Accuracy& acc);

// chi_j via the zeta power series, valid for 0 < lambda < 2 pi:
//   (2 pi)^{-(j+2)} sum_n (-1)^n/n! (lambda^2/4 pi^2)^n zeta(j+2+2n)
//                      prod_{i=1..n} (i + j/2).
// Alternating once the terms start shrinking; the reported tail bound is
// the first omitted term.
ChiValue chi_power_series(int j, long double lambda, const Accuracy& acc);

ChiValue chi(int j, long double lambda, const Accuracy& acc, ChiMode mode);

// I_d(lambda) = 2^d pi^{(d-1)/2} Gamma((d+1)/2) / lambda^d.
long double i_term(int d, long double lambda);

// C_d(lambda) = lambda sum_{j=0}^{d-1} 2^{j+2} Gamma((j+2)/2) pi^{j/2} chi_j.
long double c_term(int d, long double lambda, const Accuracy& acc,
                   ChiMode mode = ChiMode::direct);

// Lambda_j(lambda) = -lambda^{-j} 2^j pi^{(j-1)/2} Gamma((j+1)/2)
//                  + lambda^{-(j+1)} 2^{j+1} pi^{j/2} Gamma((j+2)/2)
//                  + lambda 2^{j+2} Gamma((j+2)/2) pi^{j/2} chi_j(lambda).
// The Lambda_j telescope: sum_{j<d} Lambda_j = I_d - 1 + C_d.
LambdaJValue lambda_j(int j, long double lambda, const Accuracy& acc);

XiBreakdown xi_formula(const EvalConfig& config, ChiMode mode = ChiMode::direct);

// -d/dlambda of xi_d, computed analytically:
//   d I_d / lambda - sum_j 2^{j+2} Gamma((j+2)/2) pi^{j/2}
//                           (chi_j - (j+2) lambda^2 chi_{j+2}),
// using d(lambda chi_j)/dlambda = chi_j - (j+2) lambda^2 chi_{j+2}.
long double xi_derivative(const EvalConfig& config);

// d C_d / dlambda (same chi-shift identity as above).
long double c_term_derivative(int d, long double lambda, const Accuracy& acc);

// d I_d / dlambda = -d I_d / lambda.
long double i_term_derivative(int d, long double lambda);

} // namespace latsum
