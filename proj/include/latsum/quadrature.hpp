#pragma once

#include <cmath>
#include <cstddef>

#include "latsum/accuracy.hpp"

namespace latsum {

struct QuadResult {
    long double value = 0.0L;
    long double error = 0.0L;
};

namespace detail {

template <class F>
QuadResult simpson_recurse(const F& f, long double a, long double b,
                           long double fa, long double fm, long double fb,
                           long double whole, long double tol, int depth) {
    const long double m = 0.5L * (a + b);
    const long double lm = 0.5L * (a + m);
    const long double rm = 0.5L * (m + b);
    const long double flm = f(lm);
    const long double frm = f(rm);
    const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    const long double delta = left + right - whole;
    // Richardson: Simpson on the halves gains a factor 16, so delta/15
    // estimates the error of the refined value.
    if (std::fabs(delta) <= 15.0L * tol || depth <= 0)
        return {left + right + delta / 15.0L, std::fabs(delta) / 15.0L};
    QuadResult rl = simpson_recurse(f, a, m, fa, flm, fm, left, 0.5L * tol, depth - 1);
    QuadResult rr = simpson_recurse(f, m, b, fm, frm, fb, right, 0.5L * tol, depth - 1);
    return {rl.value + rr.value, rl.error + rr.error};
}

} // namespace detail

// Adaptive Simpson on [a, b]. The tolerance handed to the recursion is
// abs_tol plus rel_tol times a coarse magnitude estimate of the integral.
template <class F>
QuadResult adaptive_simpson(const F& f, long double a, long double b,
                            long double abs_tol, long double rel_tol,
                            int max_depth = 40) {
    const long double fa = f(a);
    const long double fb = f(b);
    const long double fm = f(0.5L * (a + b));
    const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
    const long double tol = abs_tol + rel_tol * std::fabs(whole);
    QuadResult r = detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
    if (!(std::fabs(r.error) <= 16.0L * (abs_tol + rel_tol * std::fabs(r.value)) +
                                     1e-30L))
        throw ToleranceError("adaptive_simpson: error estimate above tolerance");
    return r;
}

} // namespace latsum
