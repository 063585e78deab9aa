// Weighted-dissipation tests: closed-form Pi endpoints for the quadratic
// entropy, the derivative identity D_cont' = eta~ f'', the reduction of D_RH
// to D_cont, maximal-shock oracles, the chord dissipation identity checked
// against quadrature, q~-control fits, and both calibrations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cclaw/dissipation.hpp"

using namespace cclaw;

namespace {

Models cubic_quad(double M = 2.5) {
    auto f = FluxModel::cubic(M);
    return Models{f, EntropyModel::quadratic(f)};
}

// light scan configuration for unit tests (acceptance uses the defaults)
ScanConfig light_cfg() {
    ScanConfig cfg;
    cfg.pi_grid = 256;
    cfg.u_minus_grid = 48;
    cfg.samples = 4000;
    cfg.a_resolution = 1e-3;
    return cfg;
}

} // namespace

TEST_CASE("compute_pi: closed-form endpoints 1/(1 +- sqrt(a)) for (1,0)") {
    auto m = cubic_quad();
    const ShockPair s{1.0, 0.0};
    {
        auto pi = compute_pi(m, s, WeightSpec::large(0.25));
        CHECK(pi.lo == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
        CHECK(pi.hi == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(pi.contains(s.u_l));
    }
    {
        auto pi = compute_pi(m, s, WeightSpec::large(0.01));
        CHECK(pi.lo == doctest::Approx(10.0 / 11.0).epsilon(1e-10));
        CHECK(pi.hi == doctest::Approx(10.0 / 9.0).epsilon(1e-10));
    }
    // eta~ vanishes at the endpoints and is negative at u_L
    auto pi = compute_pi(m, s, WeightSpec::large(0.1));
    CHECK(eta_tilde(m, s, WeightSpec::large(0.1), pi.lo) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(eta_tilde(m, s, WeightSpec::large(0.1), s.u_l) < 0.0);
}

TEST_CASE("compute_pi: diameter scalings sqrt(a) and 1/C") {
    auto m = cubic_quad();
    const ShockPair s{1.0, 0.0};
    for (double a : {1e-1, 1e-2, 1e-3}) {
        auto pi = compute_pi(m, s, WeightSpec::large(a));
        const double ratio = pi.diameter() / std::sqrt(a);
        CHECK(ratio == doctest::Approx(2.0).epsilon(0.12));  // 2/(1-a)
    }
    const ShockPair ss{1.0, 1.0 - 1e-6};
    for (double C : {1e2, 1e3, 1e4}) {
        auto pi = compute_pi(m, ss, WeightSpec::small(C));
        CHECK(pi.diameter() * C == doctest::Approx(2.0).epsilon(0.05));
    }
}

TEST_CASE("d_cont derivative identity: D_cont' = eta~ f''") {
    auto m = cubic_quad();
    const ShockPair s{1.0, -0.4};
    for (const auto& w : {WeightSpec::large(0.2), WeightSpec::small(3.0)}) {
        for (double u : {-1.5, -0.3, 0.4, 0.9, 1.6}) {
            const double h = 1e-6;
            const double fd =
                (d_cont(m, s, w, u + h) - d_cont(m, s, w, u - h)) / (2.0 * h);
            const double expected = eta_tilde(m, s, w, u) * m.flux.eval(u, 2);
            CHECK(fd == doctest::Approx(expected).epsilon(1e-5));
        }
    }
}

TEST_CASE("d_rh: reduction to d_cont and exact zero at the calibrated shock") {
    auto m = cubic_quad();
    const ShockPair s{1.0, 0.0};
    const auto w = WeightSpec::large(0.25);
    for (double u : {0.7, 1.0, 1.8}) {
        CHECK(d_rh(m, s, w, u, u, m.flux.eval(u, 1)) ==
              doctest::Approx(d_cont(m, s, w, u)).epsilon(1e-12));
        CHECK(d_rh(m, s, w, u, u) == doctest::Approx(d_cont(m, s, w, u)));
    }
    // the shock (u_L, u_R) itself dissipates exactly zero
    CHECK(d_rh(m, s, w, s.u_l, s.u_r) == doctest::Approx(0.0).epsilon(1e-14));
    const ShockPair ssmall{1.0, 0.92};
    CHECK(d_rh(m, ssmall, WeightSpec::small(4.0), ssmall.u_l, ssmall.u_r) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("maximal_shock: oracles and boundary reporting") {
    auto m = cubic_quad();
    {
        // large regime, seed at u_L: eta(1|1-s) = eta(1|0) gives s = 1
        const ShockPair s{1.0, 0.0};
        auto ms = maximal_shock(m, s, WeightSpec::large(0.25), 1.0, 0.5);
        CHECK(ms.s == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(ms.u_plus == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(ms.sigma == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(!ms.boundary);
        CHECK(d_max(m, s, WeightSpec::large(0.25), 1.0, 0.5) ==
              doctest::Approx(0.0).epsilon(1e-10));
    }
    {
        // small regime: maximal shock from u_L lands exactly on u_R
        const ShockPair s{1.0, 0.9};
        auto ms = maximal_shock(m, s, WeightSpec::small(5.0), 1.0, 0.5);
        CHECK(ms.u_plus == doctest::Approx(0.9).epsilon(1e-10));
        CHECK(std::abs(d_max(m, s, WeightSpec::small(5.0), 1.0, 0.5)) < 1e-12);
    }
    {
        // a seed whose maximal shock would overshoot the admissibility cap
        const ShockPair s{1.0, -0.8};
        auto ms = maximal_shock(m, s, WeightSpec::large(0.05), 1.0, 1.0);
        // cap: s <= u - phi_tangent(1) = 1.5
        CHECK(ms.boundary);
        CHECK(ms.s == doctest::Approx(1.5).epsilon(1e-9));
    }
    // seeds outside Pi are rejected
    const ShockPair s{1.0, 0.0};
    CHECK_THROWS_AS(maximal_shock(m, s, WeightSpec::large(0.25), 0.1, 0.5),
                    std::invalid_argument);
}

TEST_CASE("d_max at the Pi boundary coincides with d_cont") {
    auto m = cubic_quad();
    const ShockPair s{1.0, 0.0};
    const auto w = WeightSpec::large(0.2);
    auto pi = compute_pi(m, s, w);
    CHECK(d_max(m, s, w, pi.lo, 0.5) ==
          doctest::Approx(d_cont(m, s, w, pi.lo)).epsilon(1e-8));
    CHECK(d_max(m, s, w, pi.hi, 0.5) ==
          doctest::Approx(d_cont(m, s, w, pi.hi)).epsilon(1e-8));
}

TEST_CASE("chord dissipation identity matches quadrature") {
    auto m = cubic_quad();
    const double um = 1.1;
    auto sigma_chord = [&](double tau) {
        if (tau < 1e-6)
            return m.flux.eval(um, 1) - 0.5 * m.flux.eval(um, 2) * tau;
        return (m.flux.eval(um) - m.flux.eval(um - tau)) / tau;
    };
    auto sigma_prime = [&](double tau) {
        if (tau < 1e-6)
            return -0.5 * m.flux.eval(um, 2) + m.flux.eval(um, 3) * tau / 3.0;
        return (m.flux.eval(um - tau, 1) * tau -
                (m.flux.eval(um) - m.flux.eval(um - tau))) / (tau * tau);
    };
    for (double sjump : {0.3, 0.8, 1.4}) {
        const double up = um - sjump;
        const double sig = sigma_chord(sjump);
        for (double v : {0.3, -0.5, 1.2}) {
            const double lhs =
                rel_flux(m.entropy, m.flux, up, v) - sig * rel_entropy(m.entropy, up, v);
            const double base =
                rel_flux(m.entropy, m.flux, um, v) - sig * rel_entropy(m.entropy, um, v);
            const double integral = adaptive_simpson(
                [&](double tau) {
                    return sigma_prime(tau) * rel_entropy(m.entropy, um, um - tau);
                },
                0.0, sjump, 1e-12);
            CHECK(lhs - base == doctest::Approx(integral).epsilon(1e-8));
        }
    }
}

TEST_CASE("fit_qcontrol: bounds hold on a dense grid outside Pi") {
    auto m = cubic_quad();
    const ShockPair s{1.0, 0.0};
    const auto w = WeightSpec::large(0.2);
    auto pi = compute_pi(m, s, w);
    auto fit = fit_qcontrol(m, s, w, pi);
    CHECK(fit.C1 > 0.0);
    CHECK(fit.C2 >= 0.0);
    const double M = m.flux.M();
    for (int i = 0; i <= 2000; ++i) {
        const double u = -M + 2.0 * M * i / 2000;
        if (pi.contains(u)) continue;
        const double et = eta_tilde(m, s, w, u);
        const double dist = std::min(std::abs(u - pi.lo), std::abs(u - pi.hi));
        CHECK(et >= fit.C1 * dist - 1e-9);
        const double qt = q_tilde(m, s, w, u);
        if (qt <= 0.0) CHECK(-qt <= fit.C2 * et + 1e-9);
    }
}

TEST_CASE("calibrate_large: weight exists for (1,0) and re-passes when halved") {
    auto m = cubic_quad();
    const ShockPair s{1.0, 0.0};
    auto cfg = light_cfg();
    auto res = calibrate_large(m, s, 0.05, cfg);
    REQUIRE(res.found);
    CHECK(res.a_star > 0.0);
    CHECK(res.a_star < 1.0);
    CHECK(res.worst_margin <= cfg.tol);
    CHECK(large_weight_worst_margin(m, s, 0.05, WeightSpec::large(0.5 * res.a_star),
                                    cfg) <= cfg.tol);
}

TEST_CASE("calibrate_small: band [0.8, 1.2] admits (C0, s0_max) with cubic rate") {
    auto m = cubic_quad();
    auto cfg = light_cfg();
    auto res = calibrate_small(m, 0.8, 1.2, 6.0, cfg);
    REQUIRE(res.found);
    CHECK(res.C0 > 0.0);
    CHECK(res.s0_max > 0.0);
    CHECK(res.K_fit > 0.0);
    // the calibrated ratio sits inside the certified band for all s0 <= s0_max
    for (double s0 : {res.s0_max, 0.3 * res.s0_max, 0.01 * res.s0_max}) {
        const double r = WeightSpec::small(res.C0).ratio(s0);
        CHECK(r >= 1.0 + 0.5 * res.C0 * s0 - 1e-15);
        CHECK(r <= 1.0 + 2.0 * res.C0 * s0 + 1e-15);
    }
}
