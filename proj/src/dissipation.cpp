#include "cclaw/dissipation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cclaw/root_find.hpp"

namespace cclaw {

WeightSpec WeightSpec::large(double a) {
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("WeightSpec: large-regime a must lie in (0,1)");
    return {Regime::Large, a};
}

WeightSpec WeightSpec::small(double C) {
    if (!(C > 0.0))
        throw std::invalid_argument("WeightSpec: small-regime C must be positive");
    return {Regime::Small, C};
}

double WeightSpec::ratio(double s0) const {
    if (regime == Regime::Large) return 1.0 / value;
    if (!(s0 >= 0.0))
        throw std::invalid_argument("WeightSpec: small-regime shock size must be >= 0");
    return 1.0 + value * s0;
}

double eta_tilde(const Models& m, const ShockPair& s, const WeightSpec& w, double u) {
    const double r = w.ratio(s.s0());
    return r * rel_entropy(m.entropy, u, s.u_l) - rel_entropy(m.entropy, u, s.u_r);
}

double q_tilde(const Models& m, const ShockPair& s, const WeightSpec& w, double u) {
    const double r = w.ratio(s.s0());
    return r * rel_flux(m.entropy, m.flux, u, s.u_l) -
           rel_flux(m.entropy, m.flux, u, s.u_r);
}

double eta_tilde_d1(const Models& m, const ShockPair& s, const WeightSpec& w, double u) {
    const double r = w.ratio(s.s0());
    return (r - 1.0) * m.entropy.eval(u, 1) - r * m.entropy.eval(s.u_l, 1) +
           m.entropy.eval(s.u_r, 1);
}

double eta_tilde_d2(const Models& m, const ShockPair& s, const WeightSpec& w, double u) {
    const double r = w.ratio(s.s0());
    return (r - 1.0) * m.entropy.eval(u, 2);
}

PiInterval compute_pi(const Models& m, const ShockPair& s, const WeightSpec& w,
                      double root_tol) {
    const double M = m.flux.M();
    auto g = [&](double u) { return eta_tilde(m, s, w, u); };
    if (!(g(s.u_l) < 0.0))
        throw std::runtime_error("compute_pi: eta~ is not negative at u_L");
    auto expand = [&](double dir) {
        // walk away from u_L until eta~ turns positive, then polish
        const double limit = (dir > 0.0) ? M : -M;
        const int steps = 64;
        double prev = s.u_l;
        for (int i = 1; i <= steps; ++i) {
            const double x = s.u_l + (limit - s.u_l) * i / steps;
            if (g(x) > 0.0) {
                auto r = brent(g, prev, x, root_tol, 200);
                return r.x;
            }
            prev = x;
        }
        throw std::runtime_error(
            "compute_pi: Pi is not compactly contained in [-M, M]");
    };
    PiInterval pi;
    pi.lo = expand(-1.0);
    pi.hi = expand(+1.0);
    return pi;
}

double d_cont(const Models& m, const ShockPair& s, const WeightSpec& w, double u) {
    return -q_tilde(m, s, w, u) + m.flux.eval(u, 1) * eta_tilde(m, s, w, u);
}

double d_rh(const Models& m, const ShockPair& s, const WeightSpec& w,
            double u_minus, double u_plus, std::optional<double> sigma_opt) {
    if (std::abs(u_minus - u_plus) <= 1e-12 && !sigma_opt)
        return d_cont(m, s, w, u_minus);
    const double sigma =
        sigma_opt ? *sigma_opt : shock_speed(m.flux, u_minus, u_plus);
    const double r = w.ratio(s.s0());
    return rel_flux(m.entropy, m.flux, u_plus, s.u_r) -
           sigma * rel_entropy(m.entropy, u_plus, s.u_r) -
           r * (rel_flux(m.entropy, m.flux, u_minus, s.u_l) -
                sigma * rel_entropy(m.entropy, u_minus, s.u_l));
}

MaximalShockResult maximal_shock(const Models& m, const ShockPair& s,
                                 const WeightSpec& w, double u, double b_lo,
                                 double root_tol) {
    const double et = eta_tilde(m, s, w, u);
    if (et > 1e-10)
        throw std::invalid_argument("maximal_shock: seed state lies outside Pi");
    const double target = std::max(0.0, -et);
    const double s_upper = u - phi_tangent(m.flux, b_lo);
    auto g = [&](double ss) { return rel_entropy(m.entropy, u, u - ss) - target; };
    MaximalShockResult res;
    if (g(s_upper) < 0.0) {
        res.s = s_upper;
        res.boundary = true;
    } else {
        auto r = brent(g, 0.0, s_upper, root_tol, 200);
        res.s = r.x;
        res.boundary = false;
    }
    res.u_plus = u - res.s;
    res.sigma = shock_speed(m.flux, u, res.u_plus);
    return res;
}

double d_max(const Models& m, const ShockPair& s, const WeightSpec& w,
             double u, double b_lo) {
    const auto ms = maximal_shock(m, s, w, u, b_lo);
    return d_rh(m, s, w, u, ms.u_plus, ms.sigma);
}

// ---------------------------------------------------------------------------
// Large-regime calibration
// ---------------------------------------------------------------------------

double large_weight_worst_margin(const Models& m, const ShockPair& s,
                                 double eps, const WeightSpec& w,
                                 const ScanConfig& cfg) {
    const double M = m.flux.M();
    const PiInterval pi = compute_pi(m, s, w);
    double worst = -std::numeric_limits<double>::infinity();

    // (i) continuous functional on Pi
    for (int i = 0; i <= cfg.pi_grid; ++i) {
        const double u = pi.lo + pi.diameter() * i / cfg.pi_grid;
        worst = std::max(worst, d_cont(m, s, w, u));
    }

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const CurveSolverConfig ccfg{};
    const double k = phi_tangent(m.flux, s.u_l, ccfg);

    // (ii) admissible shocks seeded inside Pi: u+ >= phi_flat0(u-) keeps the
    // shock eta-entropic, u+ >= the Kruzhkov threshold at k = phi_tangent(u_L)
    // keeps it eta_k-entropic.
    const int ns2 = std::max(2, cfg.samples / (2 * cfg.u_minus_grid));
    for (int i = 0; i < cfg.u_minus_grid; ++i) {
        const double um = pi.lo + pi.diameter() * i / (cfg.u_minus_grid - 1);
        if (um <= 1e-6) continue;
        double lb = phi_flat0(m.entropy, m.flux, um, ccfg);
        double kb;
        if (k <= phi_tangent(m.flux, um, ccfg)) {
            kb = k;
        } else {
            try {
                kb = companion(m.flux, k, um, ccfg);
            } catch (const CurveDomainError&) {
                kb = -M;
            }
        }
        lb = std::max({lb, kb, -M});
        if (lb > um) continue;
        worst = std::max(worst, d_rh(m, s, w, um, lb));
        for (int j = 0; j < ns2; ++j) {
            const double up = lb + (um - lb) * U(rng);
            worst = std::max(worst, d_rh(m, s, w, um, up));
        }
    }

    // (iii) jumps from far-left states into Pi (no entropy requirement)
    const double lim = phi_flat0(m.entropy, m.flux, s.u_l, ccfg) - eps;
    if (lim > -M) {
        const int n3 = std::max(2, cfg.u_minus_grid / 2);
        const int ns3 = std::max(2, cfg.samples / (2 * n3));
        for (int i = 0; i < n3; ++i) {
            const double um = -M + (lim + M) * i / (n3 - 1);
            worst = std::max(worst, d_rh(m, s, w, um, pi.lo));
            worst = std::max(worst, d_rh(m, s, w, um, pi.hi));
            for (int j = 0; j < ns3; ++j) {
                const double up = pi.lo + pi.diameter() * U(rng);
                worst = std::max(worst, d_rh(m, s, w, um, up));
            }
        }
    }
    return worst;
}

CalibrateLargeResult calibrate_large(const Models& m, const ShockPair& s,
                                     double eps, const ScanConfig& cfg) {
    CalibrateLargeResult res;
    auto pass = [&](double a) {
        ++res.candidates_tested;
        try {
            return large_weight_worst_margin(m, s, eps, WeightSpec::large(a), cfg) <=
                   cfg.tol;
        } catch (const std::exception&) {
            return false;
        }
    };
    double lo = cfg.a_min;
    if (!pass(lo)) return res;  // found = false
    double hi = 1.0 - cfg.a_min;
    if (pass(hi)) {
        lo = hi;
    } else {
        while (hi - lo > cfg.a_resolution) {
            const double mid = 0.5 * (lo + hi);
            if (pass(mid)) lo = mid; else hi = mid;
        }
    }
    res.a_star = lo;
    res.found = true;
    res.worst_margin = large_weight_worst_margin(m, s, eps, WeightSpec::large(lo), cfg);
    return res;
}

// ---------------------------------------------------------------------------
// Small-regime calibration
// ---------------------------------------------------------------------------

namespace {

struct BandCheck {
    bool ok = false;
    double K = 0.0;
    std::string detail;
};

BandCheck small_band_check(const Models& m, double b_lo, double b_hi,
                           double C0, double s0_max, const ScanConfig& cfg) {
    BandCheck out;
    out.K = std::numeric_limits<double>::infinity();
    const int n_ul = 9;
    const double s0_factors[] = {1.0, 0.5, 0.25, 0.1, 0.03, 0.01};
    for (double Cf : {0.5, 1.0, 2.0}) {
        const double C = Cf * C0;
        for (int i = 0; i < n_ul; ++i) {
            const double ul = b_lo + (b_hi - b_lo) * (i + 1) / (n_ul + 1);
            for (double sf : s0_factors) {
                const double s0 = s0_max * sf;
                if (ul - s0 < b_lo) continue;
                const ShockPair sp{ul, ul - s0};
                const WeightSpec w = WeightSpec::small(C);
                PiInterval pi;
                try {
                    pi = compute_pi(m, sp, w);
                } catch (const std::exception& e) {
                    out.detail = "Pi failure: " + std::string(e.what());
                    return out;
                }
                double worst = -std::numeric_limits<double>::infinity();
                const int n = std::max(64, cfg.pi_grid / 8);
                for (int j = 0; j <= n; ++j) {
                    const double u = pi.lo + pi.diameter() * j / n;
                    worst = std::max(worst, d_cont(m, sp, w, u));
                }
                if (!(worst < 0.0)) {
                    out.detail = "D_cont nonnegative on Pi (C=" + std::to_string(C) +
                                 ", u_L=" + std::to_string(ul) +
                                 ", s0=" + std::to_string(s0) + ")";
                    return out;
                }
                out.K = std::min(out.K, -worst / (s0 * s0 * s0));
                const int nmax = 64;
                for (int j = 0; j <= nmax; ++j) {
                    const double u = pi.lo + pi.diameter() * j / nmax;
                    double dm;
                    try {
                        dm = d_max(m, sp, w, u, b_lo);
                    } catch (const std::exception& e) {
                        out.detail = "D_max failure: " + std::string(e.what());
                        return out;
                    }
                    if (dm > cfg.tol) {
                        out.detail = "D_max positive (C=" + std::to_string(C) +
                                     ", u_L=" + std::to_string(ul) +
                                     ", s0=" + std::to_string(s0) +
                                     ", u=" + std::to_string(u) + ")";
                        return out;
                    }
                }
            }
        }
    }
    out.ok = true;
    return out;
}

} // namespace

CalibrateSmallResult calibrate_small(const Models& m, double b_lo, double b_hi,
                                     double trial_C, const ScanConfig& cfg) {
    CalibrateSmallResult res;
    for (int jc = 0; jc < 6; ++jc) {
        const double C0 = trial_C * static_cast<double>(1 << jc);
        double s0_max = std::min(0.25, 0.5 * (b_hi - b_lo));
        while (s0_max >= 1e-3) {
            const auto chk = small_band_check(m, b_lo, b_hi, C0, s0_max, cfg);
            if (chk.ok) {
                res.C0 = C0;
                res.s0_max = s0_max;
                res.K_fit = chk.K;
                res.found = true;
                return res;
            }
            res.detail = chk.detail;
            s0_max *= 0.5;
        }
    }
    return res;
}

QControlFit fit_qcontrol(const Models& m, const ShockPair& s,
                         const WeightSpec& w, const PiInterval& pi) {
    QControlFit fit;
    fit.C1 = std::min(std::abs(eta_tilde_d1(m, s, w, pi.lo)),
                      std::abs(eta_tilde_d1(m, s, w, pi.hi)));
    const double M = m.flux.M();
    double ratio = 0.0;
    const int n = 1024;
    auto scan = [&](double lo, double hi) {
        if (hi <= lo) return;
        for (int i = 0; i <= n; ++i) {
            const double u = lo + (hi - lo) * i / n;
            const double et = eta_tilde(m, s, w, u);
            if (et <= 1e-14) continue;
            const double qt = q_tilde(m, s, w, u);
            if (qt <= 0.0) ratio = std::max(ratio, -qt / et);
        }
    };
    scan(-M, pi.lo);
    scan(pi.hi, M);
    fit.C2 = ratio;
    return fit;
}

} // namespace cclaw
