#pragma once

// Reference solver and stability experiments: a first-order Godunov scheme
// with the exact scalar interface flux (the Kruzhkov oracle), a Filippov
// integrator for shift paths driven by a grid solution, the weighted
// relative-entropy functional, a shifted-mode front-tracking driver, the
// cone-of-information stability experiment, and a two-discontinuity
// non-uniqueness construction.

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cclaw/dissipation.hpp"
#include "cclaw/front_tracking.hpp"
#include "cclaw/models.hpp"

namespace cclaw {

// ---------------------------------------------------------------------------
// Grid solutions
// ---------------------------------------------------------------------------

struct GridSlice {
    double time = 0.0;
    std::vector<double> cells;
};

struct GridSolution {
    double x_min = 0.0;
    double dx = 0.0;
    double cfl = 0.9;
    std::vector<GridSlice> slices;  // strictly increasing times

    std::size_t n_cells() const {
        return slices.empty() ? 0 : slices.front().cells.size();
    }
    double x_max() const { return x_min + dx * static_cast<double>(n_cells()); }
    // cell containing x, clamped to the grid
    std::size_t cell_index(double x) const;
    double value_at(std::size_t slice, double x) const;
    // index of the last slice with time <= t
    std::size_t slice_index(double t) const;
    double mass(std::size_t slice) const;
};

struct GodunovParams {
    double x_min = -4.0;
    double x_max = 4.0;
    double dx = 0.025;
    double cfl = 0.9;
    double t_end = 1.0;

    void validate() const;  // throws std::invalid_argument
};

// Exact scalar interface flux: min of f over [u_l, u_r] when u_l <= u_r,
// max of f over [u_r, u_l] otherwise (interior extrema from the cached
// critical points of f).
double godunov_flux(const FluxModel& f, double u_l, double u_r);

// First-order Godunov run with outflow ghost cells; dt is chosen from the
// CFL bound over the initial-data range and every step is stored.
GridSolution godunov_run(const Models& m, const std::function<double(double)>& u0,
                         const GodunovParams& p);

// Plain-text dump: header "x_min <v>", "dx <v>", "n <v>" then one line
// "t <time> <cell values...>" per slice.
void dump_grid(std::ostream& os, const GridSolution& g);

// Exact L1 distance between a piecewise-constant front-tracking profile and
// one grid slice over the window [lo, hi].
double l1_distance(const FrontState& st, const GridSolution& g,
                   std::size_t slice, double lo, double hi);

// ---------------------------------------------------------------------------
// Filippov shift
// ---------------------------------------------------------------------------

struct ShiftSpec {
    PiInterval pi{};          // dwell region: V = lambda(u) on Pi
    double velocity_drop = 0.0;  // C2 + 2L, subtracted outside Pi
    double t0 = 0.0;
    double x0 = 0.0;
    int trace_offset = 2;     // sample cells this many cells away from the path
    double trace_tol = 1e-6;  // traces closer than this count as equal
};

struct ShiftPath {
    double t0 = 0.0;
    double x0 = 0.0;
    std::vector<std::pair<double, double>> samples;  // (t, h(t))
    double lipschitz_bound = 0.0;
    bool truncated = false;  // path left the grid domain before the last slice

    double at(double t) const;  // linear interpolation between samples
};

// Explicit Euler on the grid's own time steps.  At each step one-sided
// traces u-, u+ are read trace_offset cells away from h(t); the velocity is
// V(u) = lambda(u) - velocity_drop * 1_{Pi^c}(u) when the traces agree, and
// otherwise the local Rankine-Hugoniot speed clamped into
// [min(V(u-), V(u+)), max(V(u-), V(u+))].
ShiftPath filippov_shift(const Models& m, const GridSolution& wild,
                         const ShiftSpec& spec);

void dump_shift(std::ostream& os, const ShiftPath& path);

// ---------------------------------------------------------------------------
// Weighted relative entropy
// ---------------------------------------------------------------------------

// Midpoint Riemann sum of  integral a(x) eta(u(x) | psi(x)) dx  over
// [lo, hi] using the grid cells of one slice (clipped to the window; exact
// for data constant on each cell).  Throws std::invalid_argument when the
// window is empty or misses the grid.
double weighted_rel_entropy(const Models& m, const GridSolution& wild,
                            std::size_t slice,
                            const std::function<double(double)>& psi,
                            const std::function<double(double)>& a, double lo,
                            double hi);

// ---------------------------------------------------------------------------
// Shifted-mode front tracking
// ---------------------------------------------------------------------------

struct ShiftedConfig {
    double a_large = 0.01;   // weight for big-shock Pi intervals
    double velocity_drop = 0.0;  // C2 + 2L applied outside Pi
    int trace_offset = 2;
    double trace_tol = 1e-6;
};

// Assign every shock the Filippov velocity read from the wild grid solution
// at the given slice (rarefaction shocks keep lambda(u_r)).  Pi intervals
// are computed per shock pair and cached across calls.
void assign_shifted_speeds(const Models& m, FrontState& st,
                           const GridSolution& wild, std::size_t slice,
                           const ShiftedConfig& cfg,
                           std::map<std::pair<double, double>, PiInterval>& cache);

struct ShiftedRunResult {
    FrontState final_state;
    std::vector<InteractionRecord> log;
    std::vector<double> sample_times;   // grid slice times visited
    std::vector<double> energy;         // windowed weighted rel-entropy per time
};

// Event loop re-assigning Filippov speeds at every grid time step; the
// energy series uses the shrinking window [-R + v t, R - v t].
ShiftedRunResult run_shifted(const Models& m, FrontState initial,
                             const GridSolution& wild, const ShiftedConfig& cfg,
                             double R, double v);

// ---------------------------------------------------------------------------
// Cone-of-information stability experiment
// ---------------------------------------------------------------------------

struct ConeParams {
    double R = 3.0;       // initial window half-width
    double v = 0.0;       // cone speed; 0 selects 1.05 * max |f'| on the range
    FrontParams front{};  // front-tracking constants (t_end is the horizon)
    GodunovParams grid{};
    ShiftedConfig shifted{};
};

struct ConeReport {
    std::vector<double> times;
    std::vector<double> energy;     // windowed weighted rel-entropy series
    double init_l2 = 0.0;           // ||wild0 - u0||_L2(-R, R)
    double final_l2 = 0.0;          // windowed L2 distance at the horizon
    double budget = 0.0;            // delta + h
    double constant = 0.0;          // final_l2 / budget
    int violations = 0;             // energy increases beyond the step budget
};

// Front tracking in shifted mode against the Godunov evolution of wild0;
// reports the energy series and the final windowed L2 comparison constant.
ConeReport cone_stability_experiment(const Models& m,
                                     const std::function<double(double)>& u0,
                                     const std::function<double(double)>& wild0,
                                     const ConeParams& p);

void dump_cone_report(std::ostream& os, const ConeReport& rep);

// ---------------------------------------------------------------------------
// Non-uniqueness construction
// ---------------------------------------------------------------------------

struct NonclassicalResult {
    bool ok = false;
    double m_state = 0.0;   // intermediate state of the two-shock profile
    double sigma1 = 0.0;    // speed of (u_l, m_state)
    double sigma2 = 0.0;    // speed of (m_state, u_r)
    double rh_err1 = 0.0, rh_err2 = 0.0;  // Rankine-Hugoniot residuals
    double e1 = 0.0, e2 = 0.0;            // entropy dissipation values
    double l2_margin = 0.0;  // L2 distance to the Godunov solution at t_end
    GridSolution profile;    // the constructed weak solution sampled on a grid
    GridSolution reference;  // the Godunov run of the same Riemann datum
};

// Two-discontinuity weak solution u_l -> m -> u_r with m in
// [phi_flat0(u_l), phi_tangent(u_l)): both jumps exactly Rankine-Hugoniot,
// both eta-entropic, ordered speeds; distinct from the Kruzhkov solution.
// When m_choice is empty the construction scans the admissible m range for
// the largest Godunov L2 margin.
NonclassicalResult nonclassical_demo(const Models& m, double u_l, double u_r,
                                     std::optional<double> m_choice = {},
                                     const GodunovParams& gp = GodunovParams{});

void dump_nonclassical(std::ostream& os, const NonclassicalResult& res);

} // namespace cclaw
