// Front-tracking tests: Riemann fans, interaction taxonomy and bookkeeping,
// event kinematics with the deterministic tie-break, the deadband
// discretization, the weight field, and structural invariants on full runs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cclaw/front_tracking.hpp"

using namespace cclaw;

namespace {

Models cubic_quad(double M = 2.5) {
    auto f = FluxModel::cubic(M);
    return Models{f, EntropyModel::quadratic(f)};
}

FrontParams base_params() {
    FrontParams p;
    p.eps = 0.1;
    p.h = 0.02;
    p.C0 = 2.0;
    p.C1 = 0.5;
    return p;
}

Wave make_wave(WaveKind kind, double ul, double ur, double x, int ell = 0) {
    Wave w;
    w.kind = kind;
    w.u_l = ul;
    w.u_r = ur;
    w.x = x;
    w.ell = ell;
    return w;
}

// copy of a state advected to time t with frozen speeds
FrontState advect(const FrontState& st, double t) {
    FrontState out = st;
    for (auto& w : out.waves) w.x += w.speed * (t - st.time);
    out.time = t;
    return out;
}

} // namespace

TEST_CASE("params validation rejects incompatible constants") {
    auto p = base_params();
    CHECK_NOTHROW(p.validate());
    auto bad = p;
    bad.h = 0.09;  // > eps/2
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.C0 = 6.0;  // C0 eps > 1/2
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.C1 = 0.7;  // > 1 - 2 C0 eps = 0.6
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("solve_riemann: shocks classified by strength, fans by ceil(s/h)") {
    auto m = cubic_quad();
    auto p = base_params();
    {
        auto ws = solve_riemann(m, 1.0, 0.95, 0.0, p);
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].kind == WaveKind::SmallShock);
        CHECK(ws[0].speed == doctest::Approx(2.8525).epsilon(1e-12));
        CHECK(ws[0].ell == 0);
    }
    {
        auto ws = solve_riemann(m, 1.0, 0.7, 0.0, p);
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].kind == WaveKind::BigShock);
        CHECK(ws[0].ell == 1);
    }
    {
        FrontParams pf = base_params();
        pf.eps = 0.2;
        pf.h = 0.1;
        pf.C0 = 1.0;
        auto ws = solve_riemann(m, 1.0, 1.25, 2.0, pf);
        REQUIRE(ws.size() == 3);
        for (int j = 0; j < 3; ++j) {
            CHECK(ws[j].kind == WaveKind::Rarefaction);
            CHECK(ws[j].u_l == doctest::Approx(1.0 + 0.25 * j / 3.0));
            CHECK(ws[j].u_r == doctest::Approx(1.0 + 0.25 * (j + 1) / 3.0));
            CHECK(ws[j].strength() < pf.h);
            CHECK(ws[j].speed ==
                  doctest::Approx(3.0 * ws[j].u_r * ws[j].u_r).epsilon(1e-12));
            CHECK(ws[j].x == 2.0);
        }
        // fan speeds strictly increase: adjacent pieces never collide
        CHECK(ws[0].speed < ws[1].speed);
        CHECK(ws[1].speed < ws[2].speed);
    }
    CHECK(solve_riemann(m, 0.8, 0.8, 0.0, p).empty());
}

TEST_CASE("classify_interaction covers the taxonomy and rejects A2") {
    auto p = base_params();
    auto big = make_wave(WaveKind::BigShock, 1.0, 0.8, 0.0, 1);
    auto small = make_wave(WaveKind::SmallShock, 0.8, 0.75, 0.0);
    auto small2 = make_wave(WaveKind::SmallShock, 0.75, 0.72, 0.0);
    auto raref = make_wave(WaveKind::Rarefaction, 1.04, 1.0, 0.0);  // right of nothing
    CHECK(classify_interaction(big, make_wave(WaveKind::BigShock, 0.8, 0.6, 0.0, 1), p) == "A1");
    CHECK(classify_interaction(big, small, p) == "A3");
    CHECK(classify_interaction(small, small2, p) == "A4");
    auto r = make_wave(WaveKind::Rarefaction, 1.0, 1.04, 0.0);
    CHECK(classify_interaction(r, make_wave(WaveKind::BigShock, 1.04, 0.84, 0.0, 1), p) == "B1");
    CHECK(classify_interaction(r, make_wave(WaveKind::SmallShock, 1.04, 0.98, 0.0), p) == "B2");
    CHECK_THROWS_AS(
        classify_interaction(r, make_wave(WaveKind::Rarefaction, 1.04, 1.08, 0.0), p),
        std::logic_error);
    // middle-state mismatch
    CHECK_THROWS_AS(
        classify_interaction(big, make_wave(WaveKind::SmallShock, 0.75, 0.7, 0.0), p),
        std::logic_error);
}

TEST_CASE("resolve_interaction: bookkeeping per taxonomy") {
    auto p = base_params();
    std::vector<double> kset;

    SUBCASE("A1 merges ell") {
        auto rec = resolve_interaction(make_wave(WaveKind::BigShock, 1.2, 1.0, 0.0, 2),
                                       make_wave(WaveKind::BigShock, 1.0, 0.7, 0.0, 1),
                                       1.0, 0.0, p, kset);
        REQUIRE(rec.out.size() == 1);
        CHECK(rec.out[0].kind == WaveKind::BigShock);
        CHECK(rec.out[0].ell == 3);
        CHECK(rec.delta_L == 1);  // two C1 jump factors collapse into one
        CHECK(kset.empty());
    }
    SUBCASE("A3 adds 1 - C0 sigma_small to K") {
        auto rec = resolve_interaction(make_wave(WaveKind::BigShock, 1.2, 1.0, 0.0, 1),
                                       make_wave(WaveKind::SmallShock, 1.0, 0.95, 0.0),
                                       1.0, 0.0, p, kset);
        CHECK(rec.out[0].kind == WaveKind::BigShock);
        CHECK(rec.out[0].ell == 1);
        CHECK(rec.delta_L == 0);
        REQUIRE(kset.size() == 1);
        CHECK(kset[0] == doctest::Approx(1.0 - 2.0 * 0.05).epsilon(1e-14));
    }
    SUBCASE("A4 promotes to big with ell bonus at the threshold") {
        auto rec = resolve_interaction(make_wave(WaveKind::SmallShock, 1.1, 1.05, 0.0),
                                       make_wave(WaveKind::SmallShock, 1.05, 1.0, 0.0),
                                       1.0, 0.0, p, kset);
        CHECK(rec.out[0].kind == WaveKind::BigShock);  // 0.05 + 0.05 >= eps
        CHECK(rec.out[0].ell == 1);
        CHECK(rec.delta_L == 0);
        auto rec2 = resolve_interaction(make_wave(WaveKind::SmallShock, 1.1, 1.06, 0.0),
                                        make_wave(WaveKind::SmallShock, 1.06, 1.02, 0.0),
                                        1.0, 0.0, p, kset);
        CHECK(rec2.out[0].kind == WaveKind::SmallShock);  // 0.08 < eps
        CHECK(rec2.out[0].ell == 0);
        CHECK(kset.empty());
    }
    SUBCASE("B1 keeps big above eps/2, demotes to small below with L bump") {
        auto rec = resolve_interaction(make_wave(WaveKind::Rarefaction, 1.0, 1.04, 0.0),
                                       make_wave(WaveKind::BigShock, 1.04, 0.84, 0.0, 1),
                                       1.0, 0.0, p, kset);
        CHECK(rec.out[0].kind == WaveKind::BigShock);  // 0.2 - 0.04 > eps/2
        CHECK(rec.out[0].ell == 1);
        CHECK(rec.delta_L == 0);
        auto rec2 = resolve_interaction(make_wave(WaveKind::Rarefaction, 1.0, 1.04, 0.0),
                                        make_wave(WaveKind::BigShock, 1.04, 0.96, 0.0, 1),
                                        1.0, 0.0, p, kset);
        CHECK(rec2.out[0].kind == WaveKind::SmallShock);  // 0.04 <= eps/2
        CHECK(rec2.out[0].ell == 1);
        CHECK(rec2.delta_L == 1);  // small carries full ell: L goes up by one
        CHECK(kset.empty());
    }
    SUBCASE("B2: net sign decides the outgoing kind and the K factor") {
        auto rec = resolve_interaction(make_wave(WaveKind::Rarefaction, 1.0, 1.04, 0.0),
                                       make_wave(WaveKind::SmallShock, 1.04, 0.98, 0.0),
                                       1.0, 0.0, p, kset);
        CHECK(rec.out[0].kind == WaveKind::SmallShock);
        CHECK(rec.out[0].strength() == doctest::Approx(0.02).epsilon(1e-12));
        REQUIRE(kset.size() == 1);
        CHECK(kset[0] == doctest::Approx((1.0 - 2.0 * 0.06) / (1.0 - 2.0 * 0.02)));
        kset.clear();
        auto rec2 = resolve_interaction(make_wave(WaveKind::Rarefaction, 1.0, 1.06, 0.0),
                                        make_wave(WaveKind::SmallShock, 1.06, 1.02, 0.0),
                                        1.0, 0.0, p, kset);
        CHECK(rec2.out[0].kind == WaveKind::Rarefaction);
        CHECK(rec2.out[0].strength() == doctest::Approx(0.02).epsilon(1e-12));
        REQUIRE(kset.size() == 1);
        CHECK(kset[0] == doctest::Approx(1.0 - 2.0 * 0.04));
        kset.clear();
        auto rec3 = resolve_interaction(make_wave(WaveKind::Rarefaction, 1.0, 1.04, 0.0),
                                        make_wave(WaveKind::SmallShock, 1.04, 1.0, 0.0),
                                        1.0, 0.0, p, kset);
        CHECK(rec3.out.empty());  // exact cancellation
        REQUIRE(kset.size() == 1);
        CHECK(kset[0] == doctest::Approx(1.0 - 2.0 * 0.04));
    }
}

TEST_CASE("advance: linear kinematics meet at the expected event") {
    auto m = cubic_quad();
    FrontState st;
    st.params = base_params();
    st.u_left = 1.1;
    auto w1 = make_wave(WaveKind::SmallShock, 1.1, 1.0, 0.0);
    auto w2 = make_wave(WaveKind::SmallShock, 1.0, 0.9, 1.0);
    w1.speed = 2.0;
    w2.speed = 1.0;
    st.waves = {w1, w2};
    std::vector<InteractionRecord> log;
    const bool fired = advance(m, st, 5.0, log);
    REQUIRE(fired);
    CHECK(st.time == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(log.size() == 1);
    CHECK(log[0].x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(log[0].taxonomy == "A4");
    REQUIRE(st.waves.size() == 1);
    CHECK(st.waves[0].kind == WaveKind::BigShock);  // 0.1 + 0.1 >= eps
    // outgoing speed is the chord speed of (1.1, 0.9)
    CHECK(st.waves[0].speed ==
          doctest::Approx(shock_speed(m.flux, 1.1, 0.9)).epsilon(1e-12));
    // no further event before the limit
    CHECK(!advance(m, st, 5.0, log));
    CHECK(st.time == 5.0);
}

TEST_CASE("advance: simultaneous collisions use the recorded tie-break") {
    auto m = cubic_quad();
    FrontState st;
    st.params = base_params();
    st.u_left = 1.2;
    auto w1 = make_wave(WaveKind::SmallShock, 1.2, 1.15, 0.0);
    auto w2 = make_wave(WaveKind::SmallShock, 1.15, 1.1, 1.0);
    auto w3 = make_wave(WaveKind::SmallShock, 1.1, 1.05, 2.0);
    w1.speed = 3.0;
    w2.speed = 2.0;
    w3.speed = 1.0;
    st.waves = {w1, w2, w3};
    std::vector<InteractionRecord> log;
    REQUIRE(advance(m, st, 5.0, log));
    REQUIRE(log.size() == 1);
    CHECK(log[0].perturbed);
    // the right-most pair is nudged and fires (just) first
    CHECK(log[0].in_left.u_l == doctest::Approx(1.15));
    CHECK(st.time == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("run: merging staircase produces exactly one A4 interaction") {
    auto m = cubic_quad();
    FrontState st;
    st.params = base_params();
    st.params.t_end = 3.0;
    st.u_left = 1.0;
    st.waves = solve_riemann(m, 1.0, 0.95, 0.0, st.params);
    auto right = solve_riemann(m, 0.95, 0.9, 0.5, st.params);
    st.waves.insert(st.waves.end(), right.begin(), right.end());
    auto res = run(m, st);
    REQUIRE(res.log.size() == 1);
    CHECK(res.log[0].taxonomy == "A4");
    CHECK(res.log[0].time == doctest::Approx(0.5 / (2.8525 - 2.5675)).epsilon(1e-10));
    REQUIRE(res.final_state.waves.size() == 1);
    CHECK(res.final_state.waves[0].kind == WaveKind::BigShock);
    CHECK(res.final_state.total_variation() == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("discretize_initial: ramps quantize, steps reproduce exactly") {
    auto m = cubic_quad();
    auto p = base_params();
    p.h = 0.1;
    p.eps = 0.2;
    p.C0 = 1.0;
    p.x_min = -1.0;
    p.x_max = 2.0;
    {
        auto ramp = [](double x) {
            if (x < 0.0) return 1.0;
            if (x > 1.0) return 1.5;
            return 1.0 + 0.5 * x;
        };
        auto res = discretize_initial(m, ramp, p);
        CHECK(res.tv == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(res.jumps <= 10);  // <= 1/h
        CHECK(res.jumps >= 4);
        CHECK(res.state.total_variation() <= 0.5 + 1e-12);
        CHECK(res.l2_error <= p.h * std::sqrt(3.0) + 1e-12);
        for (const auto& w : res.state.waves)
            CHECK(w.kind == WaveKind::Rarefaction);
        // profile stays within the data range
        for (double x : {-0.5, 0.2, 0.7, 1.5}) {
            const double v = profile_at(res.state, x);
            CHECK(v >= 1.0 - 1e-12);
            CHECK(v <= 1.5 + 1e-12);
        }
    }
    {
        auto step = [](double x) { return x < 0.5 ? 1.4 : 0.6; };
        auto res = discretize_initial(m, step, p);
        CHECK(res.jumps == 1);
        REQUIRE(res.state.waves.size() == 1);
        CHECK(res.state.waves[0].kind == WaveKind::BigShock);
        CHECK(res.state.waves[0].u_l == 1.4);
        CHECK(res.state.waves[0].u_r == 0.6);
        CHECK(res.l2_error == doctest::Approx(0.0));
    }
}

TEST_CASE("weight_at: explicit product") {
    FrontState st;
    st.params = base_params();  // C0 = 2, C1 = 0.5
    st.u_left = 1.0;
    auto s = make_wave(WaveKind::SmallShock, 1.0, 0.95, 0.0);
    auto b = make_wave(WaveKind::BigShock, 0.95, 0.75, 1.0, 1);
    st.waves = {s, b};
    st.kset = {0.8};
    // L = ell_small + (ell_big - 1) = 0, so the base factor is kset only
    CHECK(weight_at(st, -1.0) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(weight_at(st, 0.5) == doctest::Approx(0.8 * 0.9).epsilon(1e-14));
    CHECK(weight_at(st, 2.0) == doctest::Approx(0.8 * 0.9 * 0.5).epsilon(1e-14));
    // left limits at the jump points
    CHECK(weight_at(st, 0.0) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(weight_at(st, 1.0) == doctest::Approx(0.8 * 0.9).epsilon(1e-14));
}

TEST_CASE("run: structural invariants on random BV data") {
    auto m = cubic_quad();
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        FrontParams p = base_params();
        p.h = 0.04;
        p.t_end = 0.6;
        p.x_min = -3.0;
        p.x_max = 3.0;
        // random piecewise-linear BV profile in [0.6, 1.4]
        const int nk = 6;
        std::vector<double> knots(nk);
        for (auto& v : knots) v = 0.6 + 0.8 * U(rng);
        auto u0 = [&](double x) {
            const double t = (x - p.x_min) / (p.x_max - p.x_min) * (nk - 1);
            const int i = std::min(nk - 2, std::max(0, static_cast<int>(t)));
            const double fr = t - i;
            return knots[i] * (1.0 - fr) + knots[i + 1] * fr;
        };
        auto d = discretize_initial(m, u0, p);
        const double tv0 = d.state.total_variation();
        auto res = run(m, d.state);

        double umin = 1e300, umax = -1e300;
        for (double v : knots) { umin = std::min(umin, v); umax = std::max(umax, v); }

        const double c = weight_lower_bound(p, tv0);
        for (std::size_t i = 0; i < res.snapshots.size(); ++i) {
            const auto& st = res.snapshots[i];
            CHECK(st.total_variation() <= tv0 + 1e-9);
            double prev_x = -1e300;
            for (const auto& w : st.waves) {
                CHECK(w.x >= prev_x - 1e-9);
                prev_x = w.x;
                if (w.kind == WaveKind::BigShock) {
                    CHECK(w.strength() >= 0.5 * p.eps - 1e-12);
                    CHECK(w.ell >= 1);
                } else if (w.kind == WaveKind::SmallShock) {
                    CHECK(w.strength() <= p.eps + 1e-12);
                } else {
                    CHECK(w.strength() <= p.h + 1e-12);
                }
                CHECK(w.u_l >= umin - 1e-9);
                CHECK(w.u_l <= umax + 1e-9);
            }
            CHECK(st.big_count() <= std::ceil(2.0 * tv0 / p.eps));
            CHECK(st.big_L() <= std::ceil(2.0 * tv0 / p.eps));
            for (double x : {-2.5, -1.0, 0.0, 1.0, 2.5}) {
                const double a = weight_at(st, x);
                CHECK(a <= 1.0 + 1e-12);
                CHECK(a >= c - 1e-15);
            }
        }
        // weight decreases across every interaction at every point
        for (std::size_t j = 0; j + 1 < res.snapshots.size(); ++j) {
            const auto pre = advect(res.snapshots[j], res.snapshots[j + 1].time);
            const auto& post = res.snapshots[j + 1];
            for (double x : {-2.0, -0.5, 0.3, 1.7}) {
                CHECK(weight_at(post, x) <= weight_at(pre, x) + 1e-12);
            }
        }
    }
}
