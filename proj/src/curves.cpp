#include "cclaw/curves.hpp"

#include <algorithm>
#include <cmath>

#include "cclaw/root_find.hpp"

namespace cclaw {

namespace {

// Roots of a polynomial (coefficient list c0..cn) inside [lo, hi], by grid
// sign-scan + brent polish.  A concave-convex flux has a single inflection,
// so the deflated chord polynomials handled here have simple, sparse roots.
std::vector<double> poly_roots_in(const std::vector<double>& c, double lo,
                                  double hi, const CurveSolverConfig& cfg) {
    auto eval = [&c](double x) {
        double v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    };
    std::vector<double> roots;
    const int n = cfg.scan_points;
    double prev = eval(lo);
    if (prev == 0.0) roots.push_back(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double cur = eval(x);
        if (cur == 0.0) {
            roots.push_back(x);
        } else if (prev * cur < 0.0) {
            auto r = brent(eval, lo + (hi - lo) * (i - 1) / n, x, cfg.root_tol,
                           cfg.max_iter);
            roots.push_back(r.x);
        }
        prev = cur;
    }
    return roots;
}

} // namespace

double phi_tangent(const FluxModel& f, double u, const CurveSolverConfig& cfg) {
    f.check_domain(u);
    if (std::abs(u) <= cfg.root_tol) return 0.0;
    const double M = f.M();
    // g(v) = f'(v)(u - v) - (f(u) - f(v)); root with v on the opposite side
    // of the inflection.
    auto g = [&f, u](double v) {
        return f.eval(v, 1) * (u - v) - (f.eval(u) - f.eval(v));
    };
    const double lo = (u > 0.0) ? -M : 0.0;
    const double hi = (u > 0.0) ? 0.0 : M;
    const double glo = g(lo), ghi = g(hi);
    if (glo * ghi > 0.0)
        throw CurveDomainError("phi_tangent: no tangent state in [-M, M] for u = " +
                               std::to_string(u));
    auto r = brent(g, lo, hi, cfg.root_tol, cfg.max_iter);
    if (!r.converged)
        throw CurveDomainError("phi_tangent: root solve failed for u = " +
                               std::to_string(u));
    return r.x;
}

double phi_tangent_inv(const FluxModel& f, double u, const CurveSolverConfig& cfg) {
    f.check_domain(u);
    if (std::abs(u) <= cfg.root_tol) return 0.0;
    const double M = f.M();
    // w = phi_tangent_inv(u) iff the chord from u to w is tangent at u:
    // g(w) = f(u) + f'(u)(w - u) - f(w) = 0 with w on the opposite side.
    auto g = [&f, u](double w) {
        return f.eval(u) + f.eval(u, 1) * (w - u) - f.eval(w);
    };
    const double lo = (u > 0.0) ? -M : 0.0;
    const double hi = (u > 0.0) ? 0.0 : M;
    if (g(lo) * g(hi) > 0.0)
        throw CurveDomainError("phi_tangent_inv: value outside [-M, M] for u = " +
                               std::to_string(u));
    auto r = brent(g, lo, hi, cfg.root_tol, cfg.max_iter);
    if (!r.converged)
        throw CurveDomainError("phi_tangent_inv: root solve failed for u = " +
                               std::to_string(u));
    return r.x;
}

double phi_flat0(const EntropyModel& eta, const FluxModel& f, double u,
                 const CurveSolverConfig& cfg) {
    f.check_domain(u);
    if (std::abs(u) <= cfg.root_tol) return 0.0;
    const double M = f.M();
    const double vt = phi_tangent(f, u, cfg);
    // E(u, .) vanishes at u, dips negative through the tangent state, and
    // recrosses zero exactly once beyond it.
    auto g = [&](double v) { return entropy_dissipation(eta, f, u, v); };
    const double lo = (u > 0.0) ? -M : vt;
    const double hi = (u > 0.0) ? vt : M;
    if (g(lo) * g(hi) > 0.0)
        throw CurveDomainError("phi_flat0: zero-dissipation state outside [-M, M] for u = " +
                               std::to_string(u));
    auto r = brent(g, lo, hi, cfg.root_tol, cfg.max_iter);
    if (!r.converged)
        throw CurveDomainError("phi_flat0: root solve failed for u = " +
                               std::to_string(u));
    return r.x;
}

double companion(const FluxModel& f, double k, double u,
                 const CurveSolverConfig& cfg) {
    f.check_domain(u);
    f.check_domain(k);
    const double M = f.M();
    const double slope = shock_speed(f, k, u);
    // Tangency branch: the chord is tangent at k, so the third intersection
    // collapses onto k itself.
    if (std::abs(u - k) > 1e-12 &&
        std::abs(f.eval(k, 1) - slope) <= 1e-9 * (1.0 + std::abs(slope)))
        return k;
    // Chord polynomial g(v) = f(v) - f(u) - slope (v - u) has known roots at
    // u and k; deflate both out and locate the remaining intersection.
    std::vector<double> c = f.coeffs();
    if (c.size() < 2) c.resize(2, 0.0);
    c[0] -= f.eval(u) - slope * u;
    c[1] -= slope;
    auto deflate = [](std::vector<double> p, double r) {
        // synthetic division by (v - r); remainder discarded (known root)
        std::vector<double> q(p.size() - 1, 0.0);
        double carry = p.back();
        for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
            q[i] = carry;
            carry = p[i] + r * carry;
        }
        return q;
    };
    std::vector<double> h = deflate(deflate(c, u), std::abs(u - k) <= 1e-12 ? u : k);
    auto roots = poly_roots_in(h, -M, M, cfg);
    if (roots.empty())
        throw CurveDomainError("companion: no third chord intersection in [-M, M] for (k, u) = (" +
                               std::to_string(k) + ", " + std::to_string(u) + ")");
    // A single-inflection flux admits at most three chord intersections, so
    // the deflated polynomial has at most one domain root; keep the one
    // farthest from the deflated pair in case of numerical near-duplicates.
    double best = roots.front(), bestd = -1.0;
    for (double r : roots) {
        const double d = std::min(std::abs(r - u), std::abs(r - k));
        if (d > bestd) { bestd = d; best = r; }
    }
    return best;
}

double phi_sharp0(const EntropyModel& eta, const FluxModel& f, double u,
                  const CurveSolverConfig& cfg) {
    if (std::abs(u) <= cfg.root_tol) return 0.0;
    const double vf = phi_flat0(eta, f, u, cfg);
    return companion(f, vf, u, cfg);
}

} // namespace cclaw
