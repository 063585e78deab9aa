#pragma once

// Plain-text run configuration: one `key = value` per line, `#` comments.
// Parsing collects every error (with its line number) instead of stopping at
// the first; `auto` constants add the matching calibration stage to the plan.

#include <cstdint>
#include <string>
#include <vector>

#include "cclaw/front_tracking.hpp"
#include "cclaw/models.hpp"
#include "cclaw/reference.hpp"

namespace cclaw {

struct RunConfig {
    // model selectors
    std::string flux = "cubic";          // cubic only (guiding model)
    std::string entropy = "quadratic";   // quadratic | exponential
    double M = 2.5;                      // domain half-width

    // convex region
    double b_lo = 0.5;
    double b_hi = 1.5;

    // constants (auto -> calibration stage in the plan)
    double eps = 0.1;
    double C0 = 2.0;
    bool C0_auto = false;
    double C1 = 0.5;
    bool C1_auto = false;

    // front tracking
    double h = 0.02;
    std::string mode = "rh";             // rh | shifted
    double T = 1.0;
    double R = 3.0;
    double v = 0.0;                      // 0 -> automatic cone speed

    // grid
    double dx = 0.025;
    double cfl = 0.9;

    // scan densities
    int scan_density = 512;

    // experiment states and weights
    double u_l = 1.0;
    double u_r = 0.0;
    double a = 0.25;                     // large-regime weight
    double delta = 0.05;                 // perturbation size

    std::uint64_t rng_seed = 20260823;
    std::string output_dir = "out";

    // Validation messages (empty when the config is consistent).
    std::vector<std::string> validate() const;

    // Execution stages implied by `auto` constants, in order.
    std::vector<std::string> plan() const;

    Models make_models() const;
    FrontParams make_front_params() const;
    GodunovParams make_grid_params() const;
};

struct ParseResult {
    RunConfig config;
    std::vector<std::string> errors;  // "line N: message"
    bool ok() const { return errors.empty(); }
};

ParseResult parse_config(const std::string& text);

} // namespace cclaw
