#include "cclaw/models.hpp"

#include <algorithm>
#include <cmath>

namespace cclaw {

namespace {

std::vector<double> differentiate(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t i = 1; i < c.size(); ++i)
        d.push_back(static_cast<double>(i) * c[i]);
    return d;
}

double horner(const std::vector<double>& c, double u) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * u + *it;
    return v;
}

} // namespace

FluxModel::FluxModel(std::vector<double> coeffs, double M, std::string name)
    : coeffs_(std::move(coeffs)), M_(M), name_(std::move(name)) {
    if (coeffs_.empty()) throw std::invalid_argument("flux: empty coefficient list");
    if (!(M_ > 0.0)) throw std::invalid_argument("flux: M must be positive");
    der_.push_back(coeffs_);
    for (int k = 1; k <= 4; ++k) der_.push_back(differentiate(der_.back()));
}

FluxModel FluxModel::cubic(double M) {
    return FluxModel({0.0, 0.0, 0.0, 1.0}, M, "cubic");
}

double FluxModel::eval(double u, int order) const {
    if (order < 0 || order > 4) throw std::invalid_argument("flux: order must be in [0,4]");
    check_domain(u);
    if (der_[order].empty()) return 0.0;
    return horner(der_[order], u);
}

void FluxModel::check_domain(double u) const {
    if (!(std::abs(u) <= M_ + 1e-9))
        throw std::domain_error("flux: state " + std::to_string(u) +
                                " outside [-M, M] with M = " + std::to_string(M_));
}

std::vector<double> FluxModel::critical_points(double lo, double hi) const {
    // Sign-scan f' on [lo, hi] and bisect each bracket.  Polynomial degree is
    // tiny, so a fixed scan resolution is plenty.
    std::vector<double> out;
    const auto& dc = der_[1];
    if (dc.empty()) return out;
    const int n = 256;
    const double dx = (hi - lo) / n;
    double prev = horner(dc, lo);
    if (prev == 0.0) out.push_back(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + i * dx;
        const double cur = horner(dc, x);
        if (cur == 0.0) {
            out.push_back(x);
        } else if (prev * cur < 0.0) {
            double a = x - dx, b = x;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a + b);
                if (horner(dc, a) * horner(dc, m) <= 0.0) b = m; else a = m;
            }
            out.push_back(0.5 * (a + b));
        }
        prev = cur;
    }
    return out;
}

std::string check_concave_convex(const FluxModel& f, int n_samples) {
    const double M = f.M();
    if (std::abs(f.eval(0.0, 2)) > 1e-12) return "f''(0) != 0";
    if (std::abs(f.eval(0.0, 3)) < 1e-12) return "f'''(0) == 0";
    for (int i = 0; i <= n_samples; ++i) {
        const double u = -M + 2.0 * M * i / n_samples;
        if (std::abs(u) < 1e-9) continue;
        if (!(u * f.eval(u, 2) > 0.0))
            return "u f''(u) <= 0 at u = " + std::to_string(u);
    }
    return "";
}

EntropyModel::EntropyModel(std::string name,
                           std::function<double(double, int)> eval,
                           std::function<double(double)> flux)
    : name_(std::move(name)), eval_(std::move(eval)), flux_(std::move(flux)) {}

EntropyModel EntropyModel::quadratic(const FluxModel& flux) {
    // q' = 2u f'(u) is a polynomial; integrate coefficients with q(0) = 0.
    const auto& c = flux.coeffs();
    std::vector<double> qp; // coefficients of 2u f'(u)
    qp.push_back(0.0);
    for (std::size_t i = 1; i < c.size(); ++i) {
        // term of f': i*c_i u^{i-1}; times 2u -> 2 i c_i u^i
        if (qp.size() <= i) qp.resize(i + 1, 0.0);
        qp[i] += 2.0 * static_cast<double>(i) * c[i];
    }
    std::vector<double> q(qp.size() + 1, 0.0);
    for (std::size_t i = 0; i < qp.size(); ++i) q[i + 1] = qp[i] / static_cast<double>(i + 1);
    return EntropyModel(
        "quadratic",
        [](double u, int order) -> double {
            switch (order) {
                case 0: return u * u;
                case 1: return 2.0 * u;
                case 2: return 2.0;
                case 3: return 0.0;
                default: throw std::invalid_argument("entropy: order must be in [0,3]");
            }
        },
        [q](double u) { return horner(q, u); });
}

EntropyModel EntropyModel::exponential(const FluxModel& flux) {
    return EntropyModel(
        "exponential",
        [](double u, int order) -> double {
            switch (order) {
                case 0: return u * u + std::exp(u);
                case 1: return 2.0 * u + std::exp(u);
                case 2: return 2.0 + std::exp(u);
                case 3: return std::exp(u);
                default: throw std::invalid_argument("entropy: order must be in [0,3]");
            }
        },
        [flux](double u) {
            if (u == 0.0) return 0.0;
            auto integrand = [&flux](double v) {
                return (2.0 * v + std::exp(v)) * flux.eval(v, 1);
            };
            return adaptive_simpson(integrand, 0.0, u, 1e-10);
        });
}

double shock_speed(const FluxModel& f, double a, double b) {
    if (std::abs(a - b) <= 1e-12) return f.eval(a, 1);
    return (f.eval(a) - f.eval(b)) / (a - b);
}

double rel_entropy(const EntropyModel& eta, double u, double v) {
    return eta.eval(u) - eta.eval(v) - eta.eval(v, 1) * (u - v);
}

double rel_flux(const EntropyModel& eta, const FluxModel& f, double u, double v) {
    return eta.flux(u) - eta.flux(v) - eta.eval(v, 1) * (f.eval(u) - f.eval(v));
}

double rel_flux_f(const FluxModel& f, double u, double v) {
    return f.eval(u) - f.eval(v) - f.eval(v, 1) * (u - v);
}

double entropy_dissipation(const EntropyModel& eta, const FluxModel& f,
                           double u_minus, double u_plus) {
    const double sigma = shock_speed(f, u_minus, u_plus);
    return -sigma * (eta.eval(u_plus) - eta.eval(u_minus)) + eta.flux(u_plus) -
           eta.flux(u_minus);
}

double entropy_dissipation(const KruzhkovEntropy& eta, const FluxModel& f,
                           double u_minus, double u_plus) {
    const double sigma = shock_speed(f, u_minus, u_plus);
    return -sigma * (eta.eval(u_plus) - eta.eval(u_minus)) +
           eta.flux(f, u_plus) - eta.flux(f, u_minus);
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& g, double a, double fa,
                   double b, double fb, double m, double fm, double whole,
                   double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(g, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(g, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = g(a), fb = g(b), fm = g(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return simpson_rec(g, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

} // namespace cclaw
