#pragma once

// Shock admissibility predicates: the chord-position (Oleinik) condition,
// the single-entropy sign test, and the closed-form Kruzhkov-family
// predicates with a built-in dissipation-sign cross-check.

#include "cclaw/curves.hpp"
#include "cclaw/models.hpp"

namespace cclaw {

struct AdmissibilityConfig {
    int grid_points = 512;   // chord test resolution
    double tol = 1e-12;      // equality band for chord / dissipation tests
    CurveSolverConfig curves{};
};

// Oleinik chord condition for the discontinuity (u_minus -> u_plus):
// graph of f between the states lies on or below the chord when
// u_minus > u_plus, on or above when u_minus < u_plus.
bool is_oleinik(const FluxModel& f, double u_minus, double u_plus,
                const AdmissibilityConfig& cfg = {});

// Sign test: entropy_dissipation <= tol.
bool is_eta_entropic(const EntropyModel& eta, const FluxModel& f,
                     double u_minus, double u_plus,
                     const AdmissibilityConfig& cfg = {});

// Closed-form predicate for the Kruzhkov entropy |u - k|, valid for
// u_minus > 0, u_minus > u_plus, k <= u_minus:
//   k <= phi_tangent(u_minus)          : entropic iff u_plus >= k
//   phi_tangent(u_minus) < k <= u_minus: entropic iff u_plus >= companion(k, u_minus)
// Every call cross-checks the closed form against the dissipation sign and
// throws std::logic_error on hard disagreement.  k > u_minus throws
// std::invalid_argument (unsupported configuration).
bool is_kruzhkov_entropic(const FluxModel& f, double u_minus, double u_plus,
                          double k, const AdmissibilityConfig& cfg = {});

} // namespace cclaw
