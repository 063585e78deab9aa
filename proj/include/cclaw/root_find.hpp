#pragma once

// Bracketing scalar root finder: Brent's method (inverse quadratic / secant
// steps safeguarded by bisection).  All curve and dissipation solvers go
// through this; degenerate brackets fall back to pure bisection steps
// automatically, which keeps behaviour robust near the flux inflection.

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cclaw {

struct RootResult {
    double x = 0.0;
    int iters = 0;
    bool converged = false;
};

// Find a root of g in [a, b]; requires g(a) g(b) <= 0.  |bracket| <= tol or
// g == 0 terminates.  Throws std::invalid_argument on a bad bracket.
template <class F>
RootResult brent(F&& g, double a, double b, double tol = 1e-10,
                 int max_iter = 200) {
    double fa = g(a), fb = g(b);
    if (fa == 0.0) return {a, 0, true};
    if (fb == 0.0) return {b, 0, true};
    if (fa * fb > 0.0)
        throw std::invalid_argument("brent: endpoints do not bracket a root");

    double c = a, fc = fa, d = b - a, e = d;
    RootResult res;
    for (int it = 1; it <= max_iter; ++it) {
        res.iters = it;
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) {
            res.x = b;
            res.converged = true;
            return res;
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // Inverse quadratic interpolation (secant when a == c).
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = g(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    res.x = b;
    res.converged = false;
    return res;
}

// Expand/scan [lo, hi] for the first sign change of g on an n-point grid and
// polish with brent.  Returns converged = false when no bracket exists.
template <class F>
RootResult scan_root(F&& g, double lo, double hi, int n = 512,
                     double tol = 1e-10, int max_iter = 200) {
    double prev = g(lo);
    if (prev == 0.0) return {lo, 0, true};
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double cur = g(x);
        if (cur == 0.0) return {x, i, true};
        if (prev * cur < 0.0)
            return brent(g, lo + (hi - lo) * (i - 1) / n, x, tol, max_iter);
        prev = cur;
    }
    return {hi, n, false};
}

} // namespace cclaw
