#pragma once

// Auxiliary state curves of a concave-convex flux:
//   phi_tangent(u)      opposite-side state whose chord to u is tangent there
//                       (f'(v) = sigma(u, v), v != u); the classical-shock
//                       admissibility boundary.
//   phi_tangent_inv(u)  functional inverse of phi_tangent.
//   phi_flat0(u)        second zero of the entropy dissipation E(u, .); the
//                       eta-entropic admissibility boundary.
//   companion(k, u)     third intersection of the chord through (k, f(k)) and
//                       (u, f(u)) with the graph of f; equals k itself on the
//                       tangency branch u = phi_tangent_inv(k).
//   phi_sharp0(u)       companion of the chord through u and phi_flat0(u).
//
// For f(u) = u^3: phi_tangent(u) = -u/2, phi_tangent_inv(u) = -2u,
// companion(k, u) = -u - k, and with eta = u^2, phi_flat0(u) = -u.

#include "cclaw/models.hpp"

namespace cclaw {

struct CurveSolverConfig {
    double root_tol = 1e-10;
    int max_iter = 200;
    int scan_points = 2048;
};

// Errors thrown when a curve value falls outside [-M, M] or the defining
// equation has no admissible root in the domain.
class CurveDomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

double phi_tangent(const FluxModel& f, double u,
                   const CurveSolverConfig& cfg = {});
double phi_tangent_inv(const FluxModel& f, double u,
                       const CurveSolverConfig& cfg = {});
double phi_flat0(const EntropyModel& eta, const FluxModel& f, double u,
                 const CurveSolverConfig& cfg = {});
double companion(const FluxModel& f, double k, double u,
                 const CurveSolverConfig& cfg = {});
double phi_sharp0(const EntropyModel& eta, const FluxModel& f, double u,
                  const CurveSolverConfig& cfg = {});

} // namespace cclaw
