#pragma once

#include <string>
#include <vector>

namespace latsum {

struct CheckResult {
    std::string name;
    bool passed = false;
    long double measured = 0.0L;
    long double threshold = 0.0L;
};

// |LHS - RHS| of the K_0 lattice identity
//   sum_{n>=1} K_0(lambda n) = (gamma + ln(lambda/4pi))/2 + pi/(2 lambda)
//     + pi sum_{m>=1} [ (lambda^2 + 4 m^2 pi^2)^{-1/2} - 1/(2 m pi) ].
long double bessel_sum_identity_residual(long double lambda);

// The cross-module invariant suite; every entry reports its worst measured
// deviation against its threshold.
std::vector<CheckResult> run_validation();

} // namespace latsum
