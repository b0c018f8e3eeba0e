#pragma once

#include <cstdint>
#include <vector>

#include "latsum/analytic_core.hpp"

namespace latsum {

// Exact integer table of r_d(0..nmax), the number of representations of n
// as an ordered, signed sum of d squares.
struct RdTable {
    int d = 1;
    long long nmax = 0;
    std::vector<std::uint64_t> counts;
};

// Brute-force evaluation of sum_{n>=1} r_d(n) n^{p/2} e^{-lambda sqrt(n)}.
struct BruteSumResult {
    EvalConfig config{};
    long double value = 0.0L;
    long long n_cut = 0;
    long double tail_bound = 0.0L;
};

// Table-2 style record for one (d, lambda) cell.
struct ComparisonRow {
    int d = 0;
    long double lambda = 0.0L;
    long double xi_formula = 0.0L;
    long double xi_brute = 0.0L;
    long double abs_diff = 0.0L;
    long double pct_diff = 0.0L;
    long double i_term = 0.0L;
    long double c_term = 0.0L;
    long double ratio_c_over_i = 0.0L;
};

// r_d by the convolution recurrence
//   r_d(n) = sum_{k^2 <= n} r_{d-1}(n - k^2) (2 - [k = 0]),
// with overflow-checked 64-bit accumulation.
RdTable rd_table_convolution(int d, long long nmax);

// r_d by independent enumeration of nondecreasing tuples
// 0 <= n_1 <= ... <= n_d with sum n_i^2 <= nmax, each weighted by
// d! / prod(multiplicity_v!) * 2^{#nonzero}. Guarded against explosive
// tuple counts.
RdTable rd_table_enumeration(int d, long long nmax);

// Table of the same shape counting only nonnegative component vectors:
//   rho_d(n) = #{ v in N_0^d : sum v_i^2 = n }.
RdTable nonneg_table(int d, long long nmax);

// Number of integer lattice points in the closed d-ball of radius
// sqrt(nmax), counted by direct recursion over signed coordinates.
std::uint64_t ball_point_count(int d, long long nmax);

BruteSumResult xi_brute(const EvalConfig& config, int weight_p);

// Same sum evaluated against a prebuilt table (must satisfy table.d ==
// config.d); used to reuse one table across several lambda values.
BruteSumResult xi_brute_from_table(const RdTable& table, const EvalConfig& config,
                                   int weight_p);

// (1/nmax) sum_{n=0}^{nmax} r_2(n); approaches pi with the Gauss-circle
// deviation O(1/sqrt(nmax)).
long double average_order_check(long long nmax);

// Formula-versus-brute grid, ordered by (d, lambda). The formula side uses
// acc; the brute side uses eps_rel 1e-10 so the difference column measures
// the sum-to-integral replacement error, not truncation noise.
std::vector<ComparisonRow> compare(const std::vector<int>& d_list,
                                   const std::vector<long double>& lambda_list,
                                   const Accuracy& acc);

} // namespace latsum
