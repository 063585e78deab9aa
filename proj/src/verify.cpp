#include "cclaw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "cclaw/admissibility.hpp"
#include "cclaw/curves.hpp"
#include "cclaw/front_tracking.hpp"
#include "cclaw/reference.hpp"

namespace cclaw {

namespace {

constexpr double kDomainM = 2.5;

Models cubic_quad() {
    auto f = FluxModel::cubic(kDomainM);
    return Models{f, EntropyModel::quadratic(f)};
}

Models cubic_exp() {
    auto f = FluxModel::cubic(kDomainM);
    return Models{f, EntropyModel::exponential(f)};
}

// scan configuration for the calibration criteria (5-7); pinned here so the
// acceptance numbers are reproducible
ScanConfig accept_cfg() {
    ScanConfig cfg;
    cfg.pi_grid = 512;
    cfg.u_minus_grid = 96;
    cfg.samples = 20000;
    cfg.a_resolution = 1e-4;
    return cfg;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// least-squares slope of y against x
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// exact L1 distance between two piecewise-constant front profiles
double l1_profiles(const FrontState& a, const FrontState& b, double lo,
                   double hi) {
    std::vector<double> cuts{lo, hi};
    for (const auto& w : a.waves)
        if (w.x > lo && w.x < hi) cuts.push_back(w.x);
    for (const auto& w : b.waves)
        if (w.x > lo && w.x < hi) cuts.push_back(w.x);
    std::sort(cuts.begin(), cuts.end());
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        const double len = cuts[j + 1] - cuts[j];
        if (len <= 0.0) continue;
        const double xm = 0.5 * (cuts[j] + cuts[j + 1]);
        acc += std::abs(profile_at(a, xm) - profile_at(b, xm)) * len;
    }
    return acc;
}

FrontState advected_copy(const FrontState& st, double t) {
    FrontState out = st;
    for (auto& w : out.waves) w.x += w.speed * (t - st.time);
    out.time = t;
    return out;
}

// random step function on [-3, 3] with values in [b_lo, b_hi] and TV <= cap
struct StepData {
    std::vector<double> xs;      // jump positions (sorted)
    std::vector<double> vals;    // vals[i] left of xs[i], vals.back() after
    double tv = 0.0;

    double operator()(double x) const {
        std::size_t i = 0;
        while (i < xs.size() && x >= xs[i]) ++i;
        return vals[i];
    }
};

StepData random_step(std::mt19937_64& rng, double b_lo, double b_hi,
                     double tv_cap) {
    std::uniform_int_distribution<int> nd(3, 9);
    std::uniform_real_distribution<double> xd(-3.0, 3.0);
    std::uniform_real_distribution<double> vd(b_lo, b_hi);
    for (;;) {
        const int n = nd(rng);
        StepData s;
        s.xs.resize(static_cast<std::size_t>(n));
        for (auto& x : s.xs) x = xd(rng);
        std::sort(s.xs.begin(), s.xs.end());
        s.vals.resize(static_cast<std::size_t>(n) + 1);
        for (auto& v : s.vals) v = vd(rng);
        s.tv = 0.0;
        for (std::size_t i = 0; i + 1 < s.vals.size(); ++i)
            s.tv += std::abs(s.vals[i + 1] - s.vals[i]);
        if (s.tv <= tv_cap && s.tv > 0.1) return s;
    }
}

template <class F>
CriterionResult timed(int id, const char* name, F&& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
}

} // namespace

Verifier::Verifier(std::uint64_t seed) : seed_(seed) {}

const char* Verifier::criterion_name(int id) {
    switch (id) {
        case 1: return "appendix-value";
        case 2: return "closed-form-curves";
        case 3: return "kruzhkov-equivalence";
        case 4: return "pi-geometry";
        case 5: return "small-shock-rate";
        case 6: return "dmax-certification";
        case 7: return "large-calibration";
        case 8: return "front-tracking-structure";
        case 9: return "convergence-to-reference";
        case 10: return "cone-stability";
        case 11: return "non-uniqueness";
        case 12: return "product-lemma";
        default: return "unknown";
    }
}

const CalibrateSmallResult& Verifier::band_calibration() {
    if (!small_cal_) {
        auto m = cubic_quad();
        small_cal_ = calibrate_small(m, 0.5, 1.5, 8.0, accept_cfg());
    }
    return *small_cal_;
}

// --- 1: exponential-entropy zero-dissipation state at u = 1 ----------------

CriterionResult Verifier::c1_appendix_value() {
    return timed(1, criterion_name(1), [&](CriterionResult& r) {
        auto m = cubic_exp();
        const double x = phi_flat0(m.entropy, m.flux, 1.0);
        r.passed = std::abs(x - (-1.048)) <= 5e-3;
        r.detail = "phi_flat0(1) = " + fmt(x) + ", target -1.048 +- 5e-3";
    });
}

// --- 2: cubic closed-form curve oracles ------------------------------------

CriterionResult Verifier::c2_closed_forms() {
    return timed(2, criterion_name(2), [&](CriterionResult& r) {
        auto m = cubic_quad();
        double worst_t = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double u = -2.0 + 4.0 * i / 1000;
            worst_t = std::max(worst_t,
                               std::abs(phi_tangent(m.flux, u) - (-0.5 * u)));
        }
        double worst_c = 0.0;
        int pairs = 0;
        for (int i = 0; i <= 40 && pairs < 1000; ++i) {
            for (int j = 0; j <= 40 && pairs < 1000; ++j) {
                const double u = -1.2 + 2.4 * i / 40;
                const double k = -1.2 + 2.4 * j / 40;
                if (std::abs(u - k) < 0.05) continue;
                if (std::abs(-u - k) > kDomainM - 0.1) continue;
                worst_c = std::max(worst_c,
                                   std::abs(companion(m.flux, k, u) - (-u - k)));
                ++pairs;
            }
        }
        const double flat = phi_flat0(m.entropy, m.flux, 1.0);
        const double flat_err = std::abs(flat - (-1.0));
        r.passed = worst_t < 1e-9 && worst_c < 1e-9 && flat_err < 1e-9;
        r.detail = "tangent err " + fmt(worst_t) + ", companion err " +
                   fmt(worst_c) + ", flat0(1)+1 = " + fmt(flat_err);
    });
}

// --- 3: Kruzhkov closed form vs dissipation sign ---------------------------

CriterionResult Verifier::c3_kruzhkov_equivalence() {
    return timed(3, criterion_name(3), [&](CriterionResult& r) {
        auto m = cubic_quad();
        std::mt19937_64 rng(seed_ + 3);
        std::uniform_real_distribution<double> um(0.05, 2.2);
        std::uniform_real_distribution<double> uu(0.0, 1.0);
        int disagreements = 0;
        int checked = 0;
        AdmissibilityConfig cfg;
        while (checked < 10000) {
            const double u_minus = um(rng);
            const double u_plus = u_minus - uu(rng) * (u_minus + 2.2);
            const double k = u_minus - uu(rng) * (u_minus + 2.2);
            bool closed;
            try {
                closed = is_kruzhkov_entropic(m.flux, u_minus, u_plus, k, cfg);
            } catch (const std::logic_error&) {
                ++disagreements;
                ++checked;
                continue;
            }
            const double e = entropy_dissipation(KruzhkovEntropy{k}, m.flux,
                                                 u_minus, u_plus);
            if (std::abs(e) > 1e-9 && closed != (e <= 0.0)) ++disagreements;
            ++checked;
        }
        r.passed = disagreements == 0;
        r.detail = std::to_string(disagreements) + " disagreements in " +
                   std::to_string(checked) + " samples";
    });
}

// --- 4: Pi geometry --------------------------------------------------------

CriterionResult Verifier::c4_pi_geometry() {
    return timed(4, criterion_name(4), [&](CriterionResult& r) {
        auto m = cubic_quad();
        const ShockPair big{1.0, 0.0};
        double rmin = 1e300, rmax = 0.0;
        for (double a : {1e-1, 1e-2, 1e-3, 1e-4}) {
            const auto pi = compute_pi(m, big, WeightSpec::large(a));
            const double ratio = pi.diameter() / std::sqrt(a);
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
        }
        const double variation = rmax / rmin - 1.0;

        const ShockPair small{1.0, 1.0 - 1e-6};
        std::vector<double> lx, ly;
        for (double C : {1e2, 1e3, 1e4, 1e5}) {
            const auto pi = compute_pi(m, small, WeightSpec::small(C));
            lx.push_back(std::log(C));
            ly.push_back(std::log(pi.diameter()));
        }
        const double slope = ls_slope(lx, ly);
        r.passed = variation < 0.25 && std::abs(slope + 1.0) <= 0.05;
        r.detail = "sqrt(a) ratio variation " + fmt(variation) +
                   ", C-slope " + fmt(slope);
    });
}

// --- 5: cubic decay rate of D_cont for small shocks ------------------------

CriterionResult Verifier::c5_small_rate() {
    return timed(5, criterion_name(5), [&](CriterionResult& r) {
        auto m = cubic_quad();
        const auto& cal = band_calibration();
        if (!cal.found) {
            r.passed = false;
            r.detail = "band calibration failed";
            return;
        }
        std::vector<double> lx, ly;
        for (double e : {-1.0, -1.5, -2.0, -2.5, -3.0}) {
            const double s0 = std::pow(10.0, e);
            const ShockPair s{1.0, 1.0 - s0};
            const auto w = WeightSpec::small(cal.C0);
            const auto pi = compute_pi(m, s, w);
            // signed max over Pi (least negative value) carries the cubic
            // rate; interior endpoints avoid the exact zeros of eta~ at dPi
            // 4096 points resolve the ~s0-wide layer near u_L where the
            // signed max sits
            double worst = -1e300;
            for (int i = 1; i < 4096; ++i) {
                const double u = pi.lo + pi.diameter() * i / 4096;
                worst = std::max(worst, d_cont(m, s, w, u));
            }
            lx.push_back(std::log(s0));
            ly.push_back(std::log(std::max(-worst, 1e-300)));
        }
        const double slope = ls_slope(lx, ly);
        r.passed = std::abs(slope - 3.0) <= 0.15;
        r.detail = "C0 = " + fmt(cal.C0) + ", log-log slope " + fmt(slope);
    });
}

// --- 6: D_max certification over the band ----------------------------------

CriterionResult Verifier::c6_dmax_certification() {
    return timed(6, criterion_name(6), [&](CriterionResult& r) {
        auto m = cubic_quad();
        const auto& cal = band_calibration();
        if (!cal.found) {
            r.passed = false;
            r.detail = "band calibration failed";
            return;
        }
        std::mt19937_64 rng(seed_ + 6);
        std::uniform_real_distribution<double> ud(0.55, 1.5);
        std::uniform_real_distribution<double> sd(1e-4, 1.0);
        const double b_lo = 0.5;
        double worst = -1e300;
        double worst_arg_off = 0.0;
        int failures = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const double ul = ud(rng);
            const double smax = std::min(cal.s0_max, ul - b_lo) - 1e-6;
            const double s0 = sd(rng) * smax;
            const ShockPair s{ul, ul - s0};
            const auto w = WeightSpec::small(cal.C0);
            const auto pi = compute_pi(m, s, w);
            const int n = 64;
            double gmax = -1e300;
            double garg = pi.lo;
            for (int i = 0; i <= n; ++i) {
                const double u = pi.lo + pi.diameter() * i / n;
                const double dv = d_max(m, s, w, u, b_lo);
                if (dv > gmax) {
                    gmax = dv;
                    garg = u;
                }
            }
            if (gmax > 1e-9) ++failures;
            const double step = pi.diameter() / n;
            if (std::abs(garg - ul) > step + 1e-12) ++failures;
            worst = std::max(worst, gmax);
            worst_arg_off = std::max(worst_arg_off, std::abs(garg - ul));
        }
        r.passed = failures == 0;
        r.detail = "worst D_max " + fmt(worst) + ", worst argmax offset " +
                   fmt(worst_arg_off) + ", failures " + std::to_string(failures);
    });
}

// --- 7: large-shock calibration --------------------------------------------

CriterionResult Verifier::c7_large_calibration() {
    return timed(7, criterion_name(7), [&](CriterionResult& r) {
        auto m = cubic_quad();
        const double eps = 0.05;
        const auto cfg = accept_cfg();
        bool ok = true;
        std::string detail;
        for (const ShockPair s : {ShockPair{1.0, 0.0}, ShockPair{1.0, -0.4}}) {
            const auto res = calibrate_large(m, s, eps, cfg);
            bool this_ok = res.found && res.a_star > 0.0 && res.a_star < 1.0;
            if (this_ok) {
                const double half = large_weight_worst_margin(
                    m, s, eps, WeightSpec::large(0.5 * res.a_star), cfg);
                this_ok = half <= cfg.tol;
            }
            detail += "(" + fmt(s.u_l) + "," + fmt(s.u_r) + "): a* = " +
                      fmt(res.a_star) + (this_ok ? " ok; " : " FAIL; ");
            ok = ok && this_ok;
        }
        r.passed = ok;
        r.detail = detail;
    });
}

// --- 8: front-tracking structural suite ------------------------------------

CriterionResult Verifier::c8_front_tracking_suite() {
    return timed(8, criterion_name(8), [&](CriterionResult& r) {
        auto m = cubic_quad();
        std::mt19937_64 rng(seed_ + 8);
        int failures = 0;
        std::string first_fail;
        auto fail = [&](const std::string& what) {
            ++failures;
            if (first_fail.empty()) first_fail = what;
        };
        for (int run_i = 0; run_i < 20; ++run_i) {
            const auto data = random_step(rng, 0.5, 1.5, 2.0);
            FrontParams p;
            p.t_end = 0.4;
            auto disc = discretize_initial(
                m, [&](double x) { return data(x); }, p);
            const double V = disc.state.total_variation();
            const double lam_hat = 3.0 * 1.5 * 1.5;
            const double c_bound = weight_lower_bound(p, V);
            const int big_cap =
                static_cast<int>(std::ceil(2.0 * V / p.eps));
            auto res = cclaw::run(m, disc.state);

            const auto& snaps = res.snapshots;
            for (std::size_t k = 0; k < snaps.size(); ++k) {
                const auto& st = snaps[k];
                if (st.total_variation() > V + 1e-12) fail("TV increased");
                for (const auto& w : st.waves) {
                    if (w.u_l < 0.5 - 1e-12 || w.u_l > 1.5 + 1e-12 ||
                        w.u_r < 0.5 - 1e-12 || w.u_r > 1.5 + 1e-12)
                        fail("range violation");
                }
                if (st.big_count() > big_cap) fail("big-shock count");
                // weight bounds on a grid
                for (int g = 0; g <= 100; ++g) {
                    const double x = -4.0 + 8.0 * g / 100;
                    const double a = weight_at(st, x);
                    if (a < c_bound - 1e-12 || a > 1.0 + 1e-12)
                        fail("weight bounds");
                }
                if (k > 0) {
                    // L1 time-Lipschitz between consecutive snapshots
                    const double dt = snaps[k].time - snaps[k - 1].time;
                    const double l1 =
                        l1_profiles(snaps[k], snaps[k - 1], -4.0, 4.0);
                    if (l1 > V * lam_hat * 1.01 * dt + 1e-9)
                        fail("L1 Lipschitz");
                    // weight monotone across the interaction
                    const auto pre = advected_copy(snaps[k - 1], snaps[k].time);
                    for (int g = 0; g <= 200; ++g) {
                        const double x = -4.0 + 8.0 * g / 200;
                        bool near = false;
                        for (const auto& w : pre.waves)
                            near = near || std::abs(x - w.x) < 1e-7;
                        for (const auto& w : st.waves)
                            near = near || std::abs(x - w.x) < 1e-7;
                        if (near) continue;
                        if (weight_at(st, x) > weight_at(pre, x) + 1e-12)
                            fail("weight monotonicity");
                    }
                }
            }
            // exact jump ratios across the final-state waves
            const auto& fin = res.final_state;
            for (std::size_t i = 0; i < fin.waves.size(); ++i) {
                const auto& w = fin.waves[i];
                double gap = 1e-4;
                if (i > 0) gap = std::min(gap, (w.x - fin.waves[i - 1].x) / 3);
                if (i + 1 < fin.waves.size())
                    gap = std::min(gap, (fin.waves[i + 1].x - w.x) / 3);
                if (gap < 1e-12) continue;
                const double ratio = weight_at(fin, w.x + gap) /
                                     weight_at(fin, w.x - gap);
                double expect = 1.0;
                if (w.kind == WaveKind::BigShock) expect = fin.params.C1;
                if (w.kind == WaveKind::SmallShock)
                    expect = 1.0 - fin.params.C0 * w.strength();
                if (std::abs(ratio - expect) > 1e-12) fail("jump ratio");
            }
        }
        r.passed = failures == 0;
        r.detail = failures == 0
                       ? "20 runs, all structural invariants"
                       : std::to_string(failures) + " failures, first: " +
                             first_fail;
    });
}

// --- 9: convergence to the Godunov reference (RH mode) ---------------------

CriterionResult Verifier::c9_convergence() {
    return timed(9, criterion_name(9), [&](CriterionResult& r) {
        auto m = cubic_quad();
        struct Datum {
            const char* name;
            std::function<double(double)> u0;
            double tv;
        };
        std::vector<Datum> data;
        data.push_back({"riemann",
                        [](double x) { return x < 0.0 ? 1.5 : 0.5; }, 1.0});
        data.push_back({"two-wave",
                        [](double x) {
                            if (x < -1.0) return 0.6;
                            if (x < 0.0) return 1.4;
                            return 0.6;
                        },
                        1.6});
        const double T = 0.4;
        bool ok = true;
        std::string detail;
        for (const auto& d : data) {
            double prev = 1e300;
            double last = 0.0;
            bool monotone = true;
            for (double h : {0.2, 0.1, 0.05, 0.025}) {
                FrontParams p;
                p.h = h;
                p.eps = 2.0 * h;
                p.C0 = 0.25 / p.eps;
                p.C1 = 0.5;
                p.t_end = T;
                auto disc = discretize_initial(m, d.u0, p);
                auto res = cclaw::run(m, disc.state);

                GodunovParams gp;
                gp.x_min = -4.0;
                gp.x_max = 4.0;
                gp.dx = h / 4.0;
                gp.t_end = T;
                auto g = godunov_run(m, d.u0, gp);
                const double err = l1_distance(
                    res.final_state, g, g.slices.size() - 1, -3.0, 3.0);
                if (err >= prev) monotone = false;
                prev = err;
                last = err;
            }
            const bool below = last < 0.02 * d.tv;
            detail += std::string(d.name) + ": final " + fmt(last) +
                      (monotone ? " monotone" : " NOT-monotone") +
                      (below ? " ok; " : " FAIL; ");
            ok = ok && monotone && below;
        }
        r.passed = ok;
        r.detail = detail;
    });
}

// --- 10: cone-of-information stability -------------------------------------

CriterionResult Verifier::c10_cone_experiment() {
    return timed(10, criterion_name(10), [&](CriterionResult& r) {
        auto m = cubic_quad();
        auto u0 = [](double x) { return x < 0.0 ? 1.2 : 0.7; };
        double cmin = 1e300, cmax = 0.0;
        std::string detail;
        for (double delta : {0.1, 0.05}) {
            for (int refine = 0; refine < 2; ++refine) {
                ConeParams p;
                p.R = 2.0;
                p.v = 6.0;  // above max |f'| on the data range
                p.front.t_end = 0.25;
                p.front.h = refine == 0 ? 0.02 : 0.01;
                p.front.eps = 0.1;
                p.grid.x_min = -2.5;
                p.grid.x_max = 2.5;
                p.grid.dx = refine == 0 ? 0.025 : 0.0125;
                // L2-normalized bump perturbation of size delta on [-R, R]
                const double norm = std::sqrt(std::sqrt(3.14159265358979 / 20.0));
                auto wild0 = [&](double x) {
                    return u0(x) +
                           delta * std::exp(-10.0 * x * x) / norm;
                };
                auto rep = cone_stability_experiment(m, u0, wild0, p);
                const double C = rep.final_l2 / (delta + p.front.h);
                cmin = std::min(cmin, C);
                cmax = std::max(cmax, C);
                detail += "d=" + fmt(delta) + ",h=" + fmt(p.front.h) +
                          ":C=" + fmt(C) + "; ";
            }
        }
        const double spread = cmax / std::max(cmin, 1e-300);
        r.passed = std::isfinite(cmax) && spread <= 10.0;
        r.detail = detail + "spread " + fmt(spread);
    });
}

// --- 11: non-uniqueness demo ------------------------------------------------

CriterionResult Verifier::c11_nonclassical() {
    return timed(11, criterion_name(11), [&](CriterionResult& r) {
        auto m = cubic_exp();
        GodunovParams gp;
        gp.x_min = -3.0;
        gp.x_max = 3.0;
        gp.dx = 0.02;
        gp.t_end = 1.0;
        auto res = nonclassical_demo(m, 1.0, 0.02, {}, gp);
        r.passed = res.ok && res.rh_err1 <= 1e-10 && res.rh_err2 <= 1e-10 &&
                   res.e1 <= 1e-10 && res.e2 <= 1e-10 &&
                   res.sigma1 <= res.sigma2 && res.l2_margin > 0.1;
        r.detail = "m = " + fmt(res.m_state) + ", margin " +
                   fmt(res.l2_margin) + ", E = (" + fmt(res.e1) + ", " +
                   fmt(res.e2) + ")";
    });
}

// --- 12: product lemma property test ---------------------------------------

CriterionResult Verifier::c12_product_lemma() {
    return timed(12, criterion_name(12), [&](CriterionResult& r) {
        std::mt19937_64 rng(seed_ + 12);
        std::uniform_int_distribution<int> nd(1, 30);
        std::uniform_real_distribution<double> ad(0.0, 0.5);
        std::uniform_real_distribution<double> sc(0.0, 1.0);
        int violations = 0;
        const double kvals[] = {1.0, 2.0, 4.0};
        for (int trial = 0; trial < 10000; ++trial) {
            const double K = kvals[trial % 3];
            const int n = nd(rng);
            std::vector<double> a(static_cast<std::size_t>(n));
            double sum = 0.0;
            for (auto& x : a) {
                x = ad(rng);
                sum += x;
            }
            if (sum > K) {
                const double s = K * sc(rng) / sum;
                sum = 0.0;
                for (auto& x : a) {
                    x *= s;
                    sum += x;
                }
            }
            double prod = 1.0;
            for (double x : a) prod *= 1.0 - x;
            if (prod < std::pow(0.5, 4.0 * K)) ++violations;
        }
        r.passed = violations == 0;
        r.detail = std::to_string(violations) + " violations in 10000 sets";
    });
}

CriterionResult Verifier::run(int id) {
    switch (id) {
        case 1: return c1_appendix_value();
        case 2: return c2_closed_forms();
        case 3: return c3_kruzhkov_equivalence();
        case 4: return c4_pi_geometry();
        case 5: return c5_small_rate();
        case 6: return c6_dmax_certification();
        case 7: return c7_large_calibration();
        case 8: return c8_front_tracking_suite();
        case 9: return c9_convergence();
        case 10: return c10_cone_experiment();
        case 11: return c11_nonclassical();
        case 12: return c12_product_lemma();
        default: throw std::invalid_argument("criterion id out of range");
    }
}

std::vector<CriterionResult> Verifier::run_all(std::ostream* os) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) {
        out.push_back(run(id));
        if (os) {
            const auto& r = out.back();
            (*os) << "criterion " << r.id << " [" << r.name << "] "
                  << (r.passed ? "PASS" : "FAIL") << " (" << r.detail << ") "
                  << r.seconds << "s\n";
            os->flush();
        }
    }
    return out;
}

} // namespace cclaw
