#pragma once

// Scalar conservation-law state space, flux models, entropy models, and the
// pointwise relative quantities everything downstream is built from.
//
// A flux model is a polynomial f with derivatives up to order 4 on the state
// interval [-M, M].  The guiding model is the concave-convex cubic f(u) = u^3.
// Entropy models are smooth convex entropies (quadratic u^2, exponential
// u^2 + e^u) carrying their entropy flux q (normalized q(0) = 0), plus the
// non-smooth Kruzhkov family |u - k|.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cclaw {

// ---------------------------------------------------------------------------
// Flux model: polynomial coefficients c0 + c1 u + c2 u^2 + ...
// ---------------------------------------------------------------------------
class FluxModel {
  public:
    FluxModel(std::vector<double> coeffs, double M, std::string name = "poly");

    // Named constructor for the guiding cubic flux f(u) = u^3.
    static FluxModel cubic(double M = 2.0);

    // Value (order 0) or derivative of given order, order in [0, 4].
    double eval(double u, int order = 0) const;

    double M() const { return M_; }
    const std::string& name() const { return name_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Critical points of f in [lo, hi] (roots of f'), used by the exact
    // Godunov flux and the chord tests.
    std::vector<double> critical_points(double lo, double hi) const;

    void check_domain(double u) const;

  private:
    std::vector<double> coeffs_;           // c0..cn
    std::vector<std::vector<double>> der_; // coefficient arrays for orders 0..4
    double M_;
    std::string name_;
};

// Sampled check of the concave-convex shape condition
// u f''(u) > 0 for u != 0, f''(0) = 0, f'''(0) != 0.
// Returns an empty string on success, else a description of the violation.
std::string check_concave_convex(const FluxModel& f, int n_samples = 512);

// ---------------------------------------------------------------------------
// Smooth entropy model with derivatives up to order 3 and entropy flux q
// satisfying q' = eta' f', q(0) = 0.
// ---------------------------------------------------------------------------
class EntropyModel {
  public:
    // eta(u) = u^2, with closed-form polynomial q for the given flux.
    static EntropyModel quadratic(const FluxModel& flux);

    // eta(u) = u^2 + e^u, q computed by adaptive quadrature of eta' f'.
    static EntropyModel exponential(const FluxModel& flux);

    // Generic constructor: eval(u, order) for orders 0..3 and flux q(u).
    EntropyModel(std::string name,
                 std::function<double(double, int)> eval,
                 std::function<double(double)> flux);

    double eval(double u, int order = 0) const { return eval_(u, order); }
    double flux(double u) const { return flux_(u); }
    const std::string& name() const { return name_; }

  private:
    std::string name_;
    std::function<double(double, int)> eval_;
    std::function<double(double)> flux_;
};

// Kruzhkov entropy eta_k(u) = |u - k| with flux
// q_k(u) = sgn(u - k) (f(u) - f(k)).
struct KruzhkovEntropy {
    double k;
    double eval(double u) const { return std::abs(u - k); }
    double flux(const FluxModel& f, double u) const {
        const double s = (u > k) ? 1.0 : (u < k ? -1.0 : 0.0);
        return s * (f.eval(u) - f.eval(k));
    }
};

// Bundle passed around by the higher-level modules.
struct Models {
    FluxModel flux;
    EntropyModel entropy;
};

// ---------------------------------------------------------------------------
// Pointwise operations
// ---------------------------------------------------------------------------

// Rankine-Hugoniot speed (f(a) - f(b)) / (a - b); coincident states
// (|a - b| <= 1e-12) degrade to the characteristic speed f'(a).
double shock_speed(const FluxModel& f, double a, double b);

// eta(u|v) = eta(u) - eta(v) - eta'(v)(u - v)  (>= 0 for convex eta).
double rel_entropy(const EntropyModel& eta, double u, double v);

// q(u;v) = q(u) - q(v) - eta'(v)(f(u) - f(v)).
double rel_flux(const EntropyModel& eta, const FluxModel& f, double u, double v);

// f(u|v) = f(u) - f(v) - f'(v)(u - v).
double rel_flux_f(const FluxModel& f, double u, double v);

// Entropy dissipation of the discontinuity (u_minus -> u_plus) moving at its
// Rankine-Hugoniot speed:
//   E = -sigma (eta(u_plus) - eta(u_minus)) + q(u_plus) - q(u_minus).
// The discontinuity is eta-entropic iff E <= 0.
double entropy_dissipation(const EntropyModel& eta, const FluxModel& f,
                           double u_minus, double u_plus);
double entropy_dissipation(const KruzhkovEntropy& eta, const FluxModel& f,
                           double u_minus, double u_plus);

// Adaptive Simpson quadrature of g on [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double tol = 1e-10, int max_depth = 40);

} // namespace cclaw
