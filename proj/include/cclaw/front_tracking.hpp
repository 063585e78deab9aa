#pragma once

// Modified front tracking for a concave-convex flux: piecewise-constant
// profiles carried by three wave kinds (big shocks, small shocks, and
// rarefaction shocks), an event-driven advance with a deterministic
// tie-break, the interaction taxonomy A1/A3/A4 (monotone, shock-shock) and
// B1/B2 (shock-rarefaction), and the multiplicative weight field
//   a(t, x) = C1^L(t) * prod_{k in K(t)} k * prod_i xi_i(t, x).

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cclaw/models.hpp"

namespace cclaw {

enum class WaveKind { BigShock, SmallShock, Rarefaction };

const char* wave_kind_name(WaveKind k);

struct Wave {
    WaveKind kind = WaveKind::SmallShock;
    double u_l = 0.0;
    double u_r = 0.0;
    double x = 0.0;
    double speed = 0.0;
    int ell = 0;
    double strength() const { return std::abs(u_l - u_r); }
};

struct FrontParams {
    double eps = 0.1;  // big-shock strength threshold
    double h = 0.02;   // mesh size: rarefaction strength bound, quantizer base
    double C0 = 2.0;   // small-shock weight rate
    double C1 = 0.5;   // big-shock weight factor
    double t_end = 1.0;
    double x_min = -4.0;
    double x_max = 4.0;
    std::size_t max_events = 1000000;

    // Throws std::invalid_argument unless C0 h < C0 eps <= 1/2 and
    // C1 <= 1 - 2 C0 eps and h <= eps / 2; these keep every weight factor in
    // (1/2, 1] and the weight monotone through every interaction.
    void validate() const;
};

struct FrontState {
    double time = 0.0;
    double u_left = 0.0;           // state left of every wave
    std::vector<Wave> waves;       // nondecreasing positions
    std::vector<double> kset;      // accumulated K-factors
    FrontParams params;

    int big_count() const;
    int big_L() const;             // L(t) = sum_small/raref ell + sum_big (ell - 1)
    double total_variation() const;
};

struct InteractionRecord {
    double time = 0.0;
    double x = 0.0;
    std::string taxonomy;          // A1, A3, A4, B1, B2
    Wave in_left, in_right;
    std::vector<Wave> out;         // zero or one wave
    int delta_L = 0;
    std::vector<double> k_added;
    bool perturbed = false;        // tie-break speed perturbation applied
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

// Piecewise-constant approximation of u0 on [x_min, x_max] by a deadband
// sample-and-hold quantizer (deadband h * max(1, TV)), followed by a Riemann
// solve of every jump.  The quantizer never increases total variation, keeps
// the sup error below the deadband, reproduces step data exactly, and emits
// fewer than 1/h jumps.
struct DiscretizeResult {
    FrontState state;
    double l2_error = 0.0;   // ||quantized - u0||_L2 on [x_min, x_max]
    int jumps = 0;           // jump count before Riemann solving
    double tv = 0.0;         // total variation of the sampled data
};
DiscretizeResult discretize_initial(const Models& m,
                                    const std::function<double(double)>& u0,
                                    const FrontParams& p,
                                    int sample_points = 8192);

// Riemann fan at a point: decreasing jumps give one shock (big iff the
// strength is >= eps), increasing jumps give N = ceil(strength / h)
// rarefaction shocks with equispaced states, each moving at the
// characteristic speed of its right state.
std::vector<Wave> solve_riemann(const Models& m, double u_l, double u_r,
                                double x, const FrontParams& p);

// ---------------------------------------------------------------------------
// Interactions
// ---------------------------------------------------------------------------

// Taxonomy of the collision of two adjacent waves; throws std::logic_error on
// a rarefaction-rarefaction pair (unreachable) or inconsistent middle states.
std::string classify_interaction(const Wave& left, const Wave& right,
                                 const FrontParams& p);

// Replace the colliding pair by the outgoing wave (possibly none), updating
// ell bookkeeping and the K-set.  Does not assign the outgoing speed.
InteractionRecord resolve_interaction(const Wave& left, const Wave& right,
                                      double time, double x, FrontParams& p,
                                      std::vector<double>& kset);

// ---------------------------------------------------------------------------
// Evolution
// ---------------------------------------------------------------------------

// Rankine-Hugoniot speeds for every wave (shocks: chord speed; rarefaction
// shocks: characteristic speed of the right state).
void assign_rh_speeds(const Models& m, FrontState& st);

// Advance with the currently assigned speeds up to t_limit.  Returns true
// when an interaction fired strictly before t_limit (state time is then the
// event time); false when the state reached t_limit without events.
// Simultaneous events within 1e-12 are resolved by a +1e-9 speed
// perturbation of the leftmost pair, recorded on the interaction.
bool advance(const Models& m, FrontState& st, double t_limit,
             std::vector<InteractionRecord>& log);

struct RunResult {
    FrontState final_state;
    std::vector<FrontState> snapshots;   // initial state + one per interaction
    std::vector<InteractionRecord> log;
    int perturbations = 0;
};

// Event loop in Rankine-Hugoniot mode up to p.t_end.
RunResult run(const Models& m, FrontState initial);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

// Profile value at x (left limits at wave positions).
double profile_at(const FrontState& st, double x);

// Profile at a later time t >= st.time assuming no interaction in between.
double profile_at(const FrontState& st, double t, double x);

// Weight field a(t, x) at the state's own time (left limits at positions).
double weight_at(const FrontState& st, double x);

// Lower weight bound c = C1^{2 ceil(2V/eps)} (1/2)^{20 C0 V} for data of
// total variation V.
double weight_lower_bound(const FrontParams& p, double V);

// Trajectory dump: "t=<time>" header then one line per wave
// "x u_left u_right kind ell speed".
void dump_state(std::ostream& os, const FrontState& st);

} // namespace cclaw
