#include "latsum/lattice_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "latsum/special_functions.hpp"

namespace latsum {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338328L;
constexpr long long brute_cutoff_guard = 8'000'000LL;
constexpr std::uint64_t enumeration_visit_guard = 120'000'000ULL;

void check_table_request(int d, long long nmax, const char* who) {
    if (d < 1)
        throw std::domain_error(std::string(who) + ": d must be at least 1");
    if (nmax < 0)
        throw std::domain_error(std::string(who) + ": nmax must be nonnegative");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* who) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error(std::string(who) + ": count exceeds 64 bits");
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* who) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error(std::string(who) + ": count exceeds 64 bits");
    return out;
}

long long isqrt_ll(long long n) {
    if (n < 0)
        return -1;
    long long r = (long long)std::sqrt((long double)n);
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// One convolution pass: out[n] = sum_{k^2 <= n} in[n - k^2] * (2 - [k = 0]),
// i.e. one more signed square coordinate.
std::vector<std::uint64_t> convolve_square_layer(
    const std::vector<std::uint64_t>& in, long long nmax, const char* who) {
    std::vector<std::uint64_t> out(in.size(), 0);
    for (long long n = 0; n <= nmax; ++n) {
        std::uint64_t acc = in[n];
        for (long long k = 1; k * k <= n; ++k) {
            const std::uint64_t t =
                checked_mul(in[n - k * k], 2, who);
            acc = checked_add(acc, t, who);
        }
        out[n] = acc;
    }
    return out;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= (std::uint64_t)i;
    return f;
}

struct EnumerationState {
    long long nmax = 0;
    int d = 0;
    std::uint64_t dfact = 1;
    std::uint64_t visits = 0;
    std::vector<int> tuple;
    std::vector<std::uint64_t>* counts = nullptr;
};

// Walk nondecreasing tuples 0 <= v_idx <= ... and convert each into its
// orbit size under coordinate permutations and sign flips.
void enumerate_rec(EnumerationState& st, int idx, int min_v, long long remaining) {
    if (++st.visits > enumeration_visit_guard)
        throw GuardError("rd_table_enumeration: tuple walk exceeded the visit guard");
    if (idx == st.d) {
        std::uint64_t weight = st.dfact;
        int nonzero = 0;
        int run = 1;
        for (int i = 1; i <= st.d; ++i) {
            if (i < st.d && st.tuple[i] == st.tuple[i - 1]) {
                ++run;
            } else {
                weight /= factorial_u64(run);
                run = 1;
            }
        }
        for (int i = 0; i < st.d; ++i)
            if (st.tuple[i] != 0)
                ++nonzero;
        weight = checked_mul(weight, (std::uint64_t)1 << nonzero,
                             "rd_table_enumeration");
        const long long s = st.nmax - remaining;
        (*st.counts)[s] =
            checked_add((*st.counts)[s], weight, "rd_table_enumeration");
        return;
    }
    for (int v = min_v; (long long)v * v <= remaining; ++v) {
        st.tuple[idx] = v;
        enumerate_rec(st, idx + 1, v, remaining - (long long)v * v);
    }
}

// Closed form for int_R^inf r^k e^{-lambda r} dr, valid for integer k >= 0:
//   e^{-lambda R} sum_{i=0}^{k} (k!/i!) R^i / lambda^{k-i+1}.
long double exp_poly_tail_integral(int k, long double lambda, long double big_r) {
    long double integral = 0.0L;
    long double fact_ratio = 1.0L; // k!/i!, starting at i = k
    for (int i = k; i >= 0; --i) {
        integral += fact_ratio * std::pow(big_r, (long double)i) /
                    std::pow(lambda, (long double)(k - i + 1));
        fact_ratio *= (long double)i;
    }
    return std::exp(-lambda * big_r) * integral;
}

// Upper bound on the tail sum_{n > n_cut} r_d(n) n^{p/2} e^{-lambda sqrt(n)}
// via the shell-count bound and the radial integral above, with the factor
// 2 absorbing the discrete-to-continuous replacement. Only trusted once
// lambda sqrt(n_cut) clears the integrand's critical point, so before that
// it reports infinity and forces the cutoff to grow.
long double brute_tail_bound(int d, int p, long double lambda, long long n_cut) {
    const int k = d - 1 + p;
    const long double big_r = std::sqrt((long double)n_cut);
    if (lambda * big_r < (long double)(k + 2))
        return std::numeric_limits<long double>::infinity();
    const long double pref = 2.0L * std::pow(2.0L, (long double)d) *
                             std::pow(pi_l, 0.5L * (long double)(d - 1)) /
                             gamma_half(d);
    return pref * exp_poly_tail_integral(k, lambda, big_r);
}

struct GrownBrute {
    RdTable table;
    BruteSumResult result;
};

GrownBrute grow_until_bounded(const EvalConfig& config, int weight_p) {
    const long double eps = config.accuracy.eps_rel;
    long long n_cut =
        (long long)std::ceil((8.0L / config.lambda) * (8.0L / config.lambda)) +
        10;
    for (;;) {
        if (n_cut > brute_cutoff_guard)
            throw ToleranceError(
                "xi_brute: shell cutoff guard exceeded before the tail bound "
                "was met");
        RdTable table = rd_table_convolution(config.d, n_cut);
        BruteSumResult res = xi_brute_from_table(table, config, weight_p);
        if (res.tail_bound <= eps * res.value)
            return {std::move(table), res};
        n_cut *= 2;
    }
}

} // namespace

RdTable rd_table_convolution(int d, long long nmax) {
    check_table_request(d, nmax, "rd_table_convolution");
    std::vector<std::uint64_t> cur(nmax + 1, 0);
    cur[0] = 1;
    for (long long k = 1; k * k <= nmax; ++k)
        cur[k * k] = 2;
    for (int dim = 2; dim <= d; ++dim)
        cur = convolve_square_layer(cur, nmax, "rd_table_convolution");
    return {d, nmax, std::move(cur)};
}

RdTable rd_table_enumeration(int d, long long nmax) {
    check_table_request(d, nmax, "rd_table_enumeration");
    if (d > 12)
        throw std::domain_error("rd_table_enumeration: d must be at most 12");
    // Cheap a-priori proxy for the number of nondecreasing tuples; the
    // recursion also counts its visits, which is the binding guard.
    const long long base = isqrt_ll(nmax / d) + 1;
    long double estimate = 1.0L;
    for (int i = 1; i <= d; ++i)
        estimate *= (long double)(base + i) / (long double)i;
    if (estimate > 1e8L)
        throw GuardError(
            "rd_table_enumeration: estimated tuple count exceeds the guard");
    std::vector<std::uint64_t> counts(nmax + 1, 0);
    EnumerationState st;
    st.nmax = nmax;
    st.d = d;
    st.dfact = factorial_u64(d);
    st.tuple.assign(d, 0);
    st.counts = &counts;
    enumerate_rec(st, 0, 0, nmax);
    return {d, nmax, std::move(counts)};
}

RdTable nonneg_table(int d, long long nmax) {
    check_table_request(d, nmax, "nonneg_table");
    std::vector<std::uint64_t> cur(nmax + 1, 0);
    for (long long k = 0; k * k <= nmax; ++k)
        cur[k * k] = 1;
    for (int dim = 2; dim <= d; ++dim) {
        std::vector<std::uint64_t> next(nmax + 1, 0);
        for (long long n = 0; n <= nmax; ++n) {
            std::uint64_t acc = 0;
            for (long long k = 0; k * k <= n; ++k)
                acc = checked_add(acc, cur[n - k * k], "nonneg_table");
            next[n] = acc;
        }
        cur = std::move(next);
    }
    return {d, nmax, std::move(cur)};
}

std::uint64_t ball_point_count(int d, long long nmax) {
    if (d < 0)
        throw std::domain_error("ball_point_count: d must be nonnegative");
    if (nmax < 0)
        throw std::domain_error("ball_point_count: nmax must be nonnegative");
    if (d == 0)
        return 1;
    if (d == 1)
        return 2 * (std::uint64_t)isqrt_ll(nmax) + 1;
    std::uint64_t total = ball_point_count(d - 1, nmax);
    for (long long k = 1; k * k <= nmax; ++k) {
        const std::uint64_t slice = ball_point_count(d - 1, nmax - k * k);
        total = checked_add(
            total, checked_mul(slice, 2, "ball_point_count"), "ball_point_count");
    }
    return total;
}

BruteSumResult xi_brute(const EvalConfig& config, int weight_p) {
    config.validate();
    if (weight_p < 0 || weight_p > 4)
        throw std::domain_error("xi_brute: weight_p must be in 0..4");
    return grow_until_bounded(config, weight_p).result;
}

BruteSumResult xi_brute_from_table(const RdTable& table, const EvalConfig& config,
                                   int weight_p) {
    config.validate();
    if (weight_p < 0 || weight_p > 4)
        throw std::domain_error("xi_brute_from_table: weight_p must be in 0..4");
    if (table.d != config.d)
        throw std::domain_error(
            "xi_brute_from_table: table dimension does not match the config");
    if (table.nmax < 1 || (long long)table.counts.size() != table.nmax + 1)
        throw std::domain_error("xi_brute_from_table: malformed table");
    long double sum = 0.0L, comp = 0.0L;
    for (long long n = 1; n <= table.nmax; ++n) {
        if (table.counts[n] == 0)
            continue;
        const long double sq = std::sqrt((long double)n);
        long double term =
            (long double)table.counts[n] * std::exp(-config.lambda * sq);
        if (weight_p == 1)
            term *= sq;
        else if (weight_p > 1)
            term *= std::pow(sq, (long double)weight_p);
        const long double y = term - comp;
        const long double next = sum + y;
        comp = (next - sum) - y;
        sum = next;
    }
    BruteSumResult out;
    out.config = config;
    out.value = sum;
    out.n_cut = table.nmax;
    out.tail_bound = brute_tail_bound(config.d, weight_p, config.lambda,
                                      table.nmax);
    return out;
}

long double average_order_check(long long nmax) {
    if (nmax < 1)
        throw std::domain_error("average_order_check: nmax must be at least 1");
    return (long double)ball_point_count(2, nmax) / (long double)nmax;
}

std::vector<ComparisonRow> compare(const std::vector<int>& d_list,
                                   const std::vector<long double>& lambda_list,
                                   const Accuracy& acc) {
    acc.validate();
    if (d_list.empty() || lambda_list.empty())
        throw std::domain_error("compare: dimension and lambda lists must be nonempty");
    std::vector<int> ds = d_list;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::vector<long double> ls = lambda_list;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

    const Accuracy brute_acc{1e-10L, acc.max_terms};
    std::vector<ComparisonRow> rows;
    rows.reserve(ds.size() * ls.size());
    for (int d : ds) {
        EvalConfig base;
        base.d = d;
        base.lambda = ls.front();
        base.accuracy = brute_acc;
        base.validate();
        GrownBrute grown = grow_until_bounded(base, 0);
        for (long double lambda : ls) {
            EvalConfig cfg = base;
            cfg.lambda = lambda;
            BruteSumResult brute = xi_brute_from_table(grown.table, cfg, 0);
            if (!(brute.tail_bound <= brute_acc.eps_rel * brute.value))
                brute = xi_brute(cfg, 0);
            EvalConfig fcfg;
            fcfg.d = d;
            fcfg.lambda = lambda;
            fcfg.accuracy = acc;
            const XiBreakdown xb = xi_formula(fcfg, ChiMode::direct);
            ComparisonRow row;
            row.d = d;
            row.lambda = lambda;
            row.xi_formula = xb.xi;
            row.xi_brute = brute.value;
            row.abs_diff = std::fabs(xb.xi - brute.value);
            row.pct_diff = 100.0L * row.abs_diff / brute.value;
            row.i_term = xb.i_term;
            row.c_term = xb.c_term;
            row.ratio_c_over_i = xb.c_term / xb.i_term;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace latsum
