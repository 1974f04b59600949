#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "levyfp/errors.hpp"

namespace levyfp {

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth, double& err_acc) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        if (depth <= 0) err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err_acc) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err_acc);
}

}  // namespace detail

// Adaptive composite Simpson rule with absolute tolerance. Throws NumericError
// if the depth cap is hit with an accumulated error estimate above abs_tol.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
    if (!(b > a)) return 0.0;
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double err_acc = 0.0;
    const double result =
        detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, err_acc);
    if (err_acc > abs_tol) {
        throw NumericError("adaptive_simpson: tolerance not reached", err_acc);
    }
    return result;
}

// Integrates f over [a, b] split into `chunks` equal cells, each handled
// adaptively. Used for mildly oscillatory integrands where one global
// Richardson estimate is unreliable.
template <class F>
double chunked_simpson(F&& f, double a, double b, std::size_t chunks, double abs_tol,
                       int max_depth = 40) {
    if (!(b > a)) return 0.0;
    if (chunks == 0) chunks = 1;
    const double h = (b - a) / static_cast<double>(chunks);
    const double cell_tol = abs_tol / static_cast<double>(chunks);
    double sum = 0.0;
    for (std::size_t i = 0; i < chunks; ++i) {
        const double lo = a + h * static_cast<double>(i);
        const double hi = (i + 1 == chunks) ? b : lo + h;
        sum += adaptive_simpson(f, lo, hi, cell_tol, max_depth);
    }
    return sum;
}

}  // namespace levyfp
