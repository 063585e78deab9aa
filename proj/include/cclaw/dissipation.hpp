#pragma once

// Weighted relative-entropy dissipation machinery for a fixed shock
// (u_L -> u_R): the weighted entropy eta~ and flux q~, the negativity set
// Pi = {eta~ <= 0}, the continuous and Rankine-Hugoniot dissipation
// functionals, the maximal shock, and the weight calibrations for the
// large-shock and small-shock regimes.

#include <cstdint>
#include <optional>
#include <string>

#include "cclaw/curves.hpp"
#include "cclaw/models.hpp"

namespace cclaw {

struct ShockPair {
    double u_l = 0.0;
    double u_r = 0.0;
    double s0() const { return u_l - u_r; }
};

// Weight pair (a1, a2) enters only through the ratio a1/a2 >= 1.
//   Large regime: a = a2/a1 in (0,1), ratio = 1/a   (big shocks).
//   Small regime: ratio = 1 + C s0                  (small shocks).
struct WeightSpec {
    enum class Regime { Large, Small };
    Regime regime = Regime::Large;
    double value = 0.5; // a for Large, C for Small

    static WeightSpec large(double a);
    static WeightSpec small(double C);
    double ratio(double s0) const;
};

struct PiInterval {
    double lo = 0.0;
    double hi = 0.0;
    double diameter() const { return hi - lo; }
    bool contains(double u) const { return u >= lo && u <= hi; }
};

// eta~(u) = ratio * eta(u|u_L) - eta(u|u_R), q~ analogously with q(.;.).
double eta_tilde(const Models& m, const ShockPair& s, const WeightSpec& w, double u);
double q_tilde(const Models& m, const ShockPair& s, const WeightSpec& w, double u);

// Derivatives of eta~ (analytic, used by the shift-velocity fit).
double eta_tilde_d1(const Models& m, const ShockPair& s, const WeightSpec& w, double u);
double eta_tilde_d2(const Models& m, const ShockPair& s, const WeightSpec& w, double u);

// Pi = {eta~ <= 0}: closed interval containing u_L, endpoints located to
// root_tol.  Throws std::runtime_error when Pi is empty or not compactly
// contained in [-M, M].
PiInterval compute_pi(const Models& m, const ShockPair& s, const WeightSpec& w,
                      double root_tol = 1e-11);

// D_cont(u) = -q~(u) + lambda(u) eta~(u), lambda = f'.
double d_cont(const Models& m, const ShockPair& s, const WeightSpec& w, double u);

// D_RH(u-, u+, sigma) =
//   q(u+;u_R) - sigma eta(u+|u_R) - ratio (q(u-;u_L) - sigma eta(u-|u_L)).
// sigma defaults to the Rankine-Hugoniot speed of (u-, u+); coincident
// traces reduce to D_cont.
double d_rh(const Models& m, const ShockPair& s, const WeightSpec& w,
            double u_minus, double u_plus,
            std::optional<double> sigma = std::nullopt);

// Maximal entropic shock seeded at u: the decreasing jump u -> u - s* with
// eta(u|u - s*) = -eta~(u), capped at the tangent-admissibility bound
// s <= u - phi_tangent(b_lo).  boundary is set when the cap is active.
struct MaximalShockResult {
    double s = 0.0;
    double u_plus = 0.0;
    double sigma = 0.0;
    bool boundary = false;
};
MaximalShockResult maximal_shock(const Models& m, const ShockPair& s,
                                 const WeightSpec& w, double u, double b_lo,
                                 double root_tol = 1e-12);

// D_max(u) = D_RH(u, u - s*, sigma(u, u - s*)).
double d_max(const Models& m, const ShockPair& s, const WeightSpec& w,
             double u, double b_lo);

// ---------------------------------------------------------------------------
// Calibrations
// ---------------------------------------------------------------------------

struct ScanConfig {
    int pi_grid = 2048;        // grid for the D_cont scan over Pi
    int u_minus_grid = 256;    // u- grid for the shock scans
    int samples = 100000;      // random shock samples per candidate
    double tol = 1e-9;         // negativity tolerance for both functionals
    double a_resolution = 1e-4;
    double a_min = 1e-4;
    std::uint64_t seed = 20260823;
};

// Largest weight a in (0,1) such that the large-regime functionals are
// nonpositive: (i) D_cont <= tol on Pi_a, (ii) D_RH <= tol for sampled
// admissible shocks (entropic for eta and for the Kruzhkov entropy at
// k = phi_tangent(u_L)) with u- in Pi_a, (iii) D_RH <= tol for jumps from
// u- <= phi_flat0(u_L) - eps into Pi_a.  Bisection to a_resolution, ties
// toward the smaller (safe) side.
struct CalibrateLargeResult {
    double a_star = 0.0;
    bool found = false;
    double worst_margin = 0.0;  // max functional value observed at a_star
    int candidates_tested = 0;
};
CalibrateLargeResult calibrate_large(const Models& m, const ShockPair& s,
                                     double eps, const ScanConfig& cfg = {});

// Verification predicate behind calibrate_large, reusable for re-checks at
// smaller weights.  Returns the worst (largest) functional value seen.
double large_weight_worst_margin(const Models& m, const ShockPair& s,
                                 double eps, const WeightSpec& w,
                                 const ScanConfig& cfg = {});

// Small-shock calibration on the state band [b_lo, b_hi]: finds (C0, s0_max)
// such that for every C in {C0/2, C0, 2 C0}, every sampled u_L in the band
// and every sampled shock size s0 <= s0_max, D_cont <= -K s0^3 on Pi for a
// fitted K > 0 and D_max <= tol on Pi.
struct CalibrateSmallResult {
    double C0 = 0.0;
    double s0_max = 0.0;
    double K_fit = 0.0;   // fitted cubic-rate constant (min over samples)
    bool found = false;
    std::string detail;
};
CalibrateSmallResult calibrate_small(const Models& m, double b_lo, double b_hi,
                                     double trial_C, const ScanConfig& cfg = {});

// Fitted constants of the q~-control estimate outside Pi; C2 bounds
// |q~| / eta~ where q~ <= 0, and feeds the shift velocity
// V(u) = lambda(u) - (C2 + 2 L) outside Pi.
struct QControlFit {
    double C1 = 0.0;  // lower bound constant: eta~(u) >= C1 dist(u, dPi)
    double C2 = 0.0;  // |q~| <= C2 eta~ where q~ <= 0 outside Pi
};
QControlFit fit_qcontrol(const Models& m, const ShockPair& s,
                         const WeightSpec& w, const PiInterval& pi);

} // namespace cclaw
