#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

// Small local quadrature helpers (adaptive Simpson with Richardson
// correction, and composite Simpson over stored samples).

namespace diskflow {

namespace detail {

template <class F>
double simpson_panel(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson_recur(F& f, double a, double b, double eps, int depth,
                              double fa, double fm, double fb, double whole) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_panel<F>(a, m, fa, flm, fm);
    const double right = simpson_panel<F>(m, b, fm, frm, fb);
    const double diff = (left + right) - whole;
    if (std::fabs(diff) <= 15.0 * eps || depth <= 0)
        return left + right + diff / 15.0;
    return adaptive_simpson_recur(f, a, m, 0.5 * eps, depth - 1, fa, flm, fm, left) +
           adaptive_simpson_recur(f, m, b, 0.5 * eps, depth - 1, fm, frm, fb, right);
}

}  // namespace detail

template <class F>
double integrate_adaptive(F f, double a, double b, double tol = 1e-10, int max_depth = 40) {
    if (a == b) return 0.0;
    if (b < a) return -integrate_adaptive(f, b, a, tol, max_depth);
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = detail::simpson_panel<F>(a, b, fa, fm, fb);
    return detail::adaptive_simpson_recur(f, a, b, tol, max_depth, fa, fm, fb, whole);
}

// Composite Simpson over n+1 equispaced samples y[0..n] with spacing h;
// n must be even.
inline double simpson_samples(const double* y, std::size_t n, double h) {
    double s4 = 0.0, s2 = 0.0;
    for (std::size_t i = 1; i < n; i += 2) s4 += y[i];
    for (std::size_t i = 2; i < n; i += 2) s2 += y[i];
    return h / 3.0 * (y[0] + y[n] + 4.0 * s4 + 2.0 * s2);
}

}  // namespace diskflow
