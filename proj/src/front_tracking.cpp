#include "cclaw/front_tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cclaw {

namespace {
constexpr double kTieTol = 1e-12;
constexpr double kSpeedPerturb = 1e-9;
} // namespace

const char* wave_kind_name(WaveKind k) {
    switch (k) {
        case WaveKind::BigShock: return "big";
        case WaveKind::SmallShock: return "small";
        case WaveKind::Rarefaction: return "raref";
    }
    return "?";
}

void FrontParams::validate() const {
    if (!(eps > 0.0) || !(h > 0.0))
        throw std::invalid_argument("front tracking: eps and h must be positive");
    if (!(h <= 0.5 * eps))
        throw std::invalid_argument("front tracking: requires h <= eps / 2");
    if (!(C0 > 0.0) || !(C0 * eps <= 0.5))
        throw std::invalid_argument("front tracking: requires 0 < C0 eps <= 1/2");
    if (!(C1 > 0.0) || !(C1 <= 1.0 - 2.0 * C0 * eps))
        throw std::invalid_argument("front tracking: requires 0 < C1 <= 1 - 2 C0 eps");
    if (!(x_min < x_max))
        throw std::invalid_argument("front tracking: empty spatial window");
    if (!(t_end >= 0.0))
        throw std::invalid_argument("front tracking: t_end must be nonnegative");
}

int FrontState::big_count() const {
    int n = 0;
    for (const auto& w : waves) n += (w.kind == WaveKind::BigShock);
    return n;
}

int FrontState::big_L() const {
    int L = 0;
    for (const auto& w : waves)
        L += (w.kind == WaveKind::BigShock) ? w.ell - 1 : w.ell;
    return L;
}

double FrontState::total_variation() const {
    double tv = 0.0;
    for (const auto& w : waves) tv += w.strength();
    return tv;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

std::vector<Wave> solve_riemann(const Models& m, double u_l, double u_r,
                                double x, const FrontParams& p) {
    std::vector<Wave> out;
    const double s = std::abs(u_l - u_r);
    if (s <= 1e-14) return out;
    if (u_l > u_r) {
        Wave w;
        w.kind = (s >= p.eps - 1e-12) ? WaveKind::BigShock : WaveKind::SmallShock;
        w.u_l = u_l;
        w.u_r = u_r;
        w.x = x;
        w.ell = (w.kind == WaveKind::BigShock) ? 1 : 0;
        w.speed = shock_speed(m.flux, u_l, u_r);
        out.push_back(w);
    } else {
        int N = static_cast<int>(std::ceil(s / p.h));
        if (s / N >= p.h) ++N;  // keep every piece strictly below h
        for (int j = 0; j < N; ++j) {
            Wave w;
            w.kind = WaveKind::Rarefaction;
            w.u_l = u_l + s * j / N;
            w.u_r = u_l + s * (j + 1) / N;
            w.x = x;
            w.ell = 0;
            w.speed = m.flux.eval(w.u_r, 1);
            out.push_back(w);
        }
    }
    return out;
}

DiscretizeResult discretize_initial(const Models& m,
                                    const std::function<double(double)>& u0,
                                    const FrontParams& p, int sample_points) {
    p.validate();
    DiscretizeResult res;
    res.state.params = p;

    const int n = sample_points;
    std::vector<double> xs(n + 1), us(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = p.x_min + (p.x_max - p.x_min) * i / n;
        us[i] = u0(xs[i]);
        m.flux.check_domain(us[i]);
    }
    double tv = 0.0;
    for (int i = 0; i < n; ++i) tv += std::abs(us[i + 1] - us[i]);
    res.tv = tv;

    // Deadband sample-and-hold: jump to the exact sample value whenever it
    // drifts more than q from the held value.  Each jump is backed by at
    // least q of genuine variation, so TV never increases and the jump count
    // stays below TV/q <= 1/h.
    const double q = p.h * std::max(1.0, tv);
    double held = us[0];
    res.state.u_left = held;
    double l2 = 0.0;
    const double dx = (p.x_max - p.x_min) / n;
    std::vector<std::pair<double, std::pair<double, double>>> jumps;
    for (int i = 0; i <= n; ++i) {
        if (std::abs(us[i] - held) > q) {
            jumps.push_back({xs[i], {held, us[i]}});
            held = us[i];
        }
        const double e = us[i] - held;
        l2 += e * e * dx;
    }
    res.l2_error = std::sqrt(l2);
    res.jumps = static_cast<int>(jumps.size());

    for (const auto& [x, states] : jumps) {
        auto waves = solve_riemann(m, states.first, states.second, x, p);
        res.state.waves.insert(res.state.waves.end(), waves.begin(), waves.end());
    }
    return res;
}

// ---------------------------------------------------------------------------
// Interactions
// ---------------------------------------------------------------------------

namespace {

void check_pair(const Wave& left, const Wave& right) {
    if (std::abs(left.u_r - right.u_l) > 1e-9)
        throw std::logic_error("interaction: middle states do not match");
    if (left.kind == WaveKind::Rarefaction && right.kind == WaveKind::Rarefaction)
        throw std::logic_error(
            "interaction: rarefaction-rarefaction collision must not occur");
    const double uL = left.u_l, uM = left.u_r, uR = right.u_r;
    const bool monotone = (uM - uL) * (uR - uM) >= -1e-12;
    const bool both_shocks =
        left.kind != WaveKind::Rarefaction && right.kind != WaveKind::Rarefaction;
    if (both_shocks != monotone)
        throw std::logic_error(
            "interaction: monotonicity inconsistent with wave kinds");
}

} // namespace

std::string classify_interaction(const Wave& left, const Wave& right,
                                 const FrontParams& p) {
    check_pair(left, right);
    const bool lb = left.kind == WaveKind::BigShock;
    const bool rb = right.kind == WaveKind::BigShock;
    const bool lr = left.kind == WaveKind::Rarefaction;
    const bool rr = right.kind == WaveKind::Rarefaction;
    if (!lr && !rr) {
        if (lb && rb) return "A1";
        if (lb || rb) return "A3";
        return "A4";
    }
    (void)p;
    const Wave& sh = lr ? right : left;
    return (sh.kind == WaveKind::BigShock) ? "B1" : "B2";
}

InteractionRecord resolve_interaction(const Wave& left, const Wave& right,
                                      double time, double x, FrontParams& p,
                                      std::vector<double>& kset) {
    InteractionRecord rec;
    rec.time = time;
    rec.x = x;
    rec.in_left = left;
    rec.in_right = right;
    rec.taxonomy = classify_interaction(left, right, p);

    const double uL = left.u_l, uR = right.u_r;
    const int sum_ell = left.ell + right.ell;
    auto contrib = [](const Wave& w) {
        return (w.kind == WaveKind::BigShock) ? w.ell - 1 : w.ell;
    };
    const int L_before = contrib(left) + contrib(right);

    Wave out;
    out.u_l = uL;
    out.u_r = uR;
    out.x = x;
    out.speed = 0.0;
    bool has_out = true;

    if (rec.taxonomy == "A1") {
        out.kind = WaveKind::BigShock;
        out.ell = sum_ell;
    } else if (rec.taxonomy == "A3") {
        out.kind = WaveKind::BigShock;
        out.ell = sum_ell;
        const Wave& small = (left.kind == WaveKind::SmallShock) ? left : right;
        rec.k_added.push_back(1.0 - p.C0 * small.strength());
    } else if (rec.taxonomy == "A4") {
        const double s = left.strength() + right.strength();
        if (s >= p.eps - 1e-12) {
            out.kind = WaveKind::BigShock;
            out.ell = sum_ell + 1;
        } else {
            out.kind = WaveKind::SmallShock;
            out.ell = sum_ell;
        }
    } else if (rec.taxonomy == "B1") {
        const Wave& sh = (left.kind == WaveKind::BigShock) ? left : right;
        const Wave& rf = (left.kind == WaveKind::Rarefaction) ? left : right;
        const double s_out = sh.strength() - rf.strength();
        if (s_out <= 1e-12)
            throw std::logic_error(
                "B1: rarefaction at least as strong as a big shock (h too large)");
        out.kind = (s_out > 0.5 * p.eps) ? WaveKind::BigShock : WaveKind::SmallShock;
        out.ell = sum_ell;
    } else {  // B2
        const Wave& sh = (left.kind == WaveKind::SmallShock) ? left : right;
        const Wave& rf = (left.kind == WaveKind::Rarefaction) ? left : right;
        const double ss = sh.strength(), sr = rf.strength();
        if (sr > ss + 1e-12) {
            out.kind = WaveKind::Rarefaction;
            out.ell = sum_ell;
            rec.k_added.push_back(1.0 - p.C0 * ss);
        } else if (ss > sr + 1e-12) {
            out.kind = WaveKind::SmallShock;
            out.ell = sum_ell;
            rec.k_added.push_back((1.0 - p.C0 * ss) /
                                  (1.0 - p.C0 * (ss - sr)));
        } else {
            has_out = false;  // exact cancellation
            rec.k_added.push_back(1.0 - p.C0 * ss);
        }
    }

    int L_after = 0;
    if (has_out) {
        rec.out.push_back(out);
        L_after = contrib(out);
    }
    rec.delta_L = L_after - L_before;
    for (double k : rec.k_added) kset.push_back(k);
    return rec;
}

// ---------------------------------------------------------------------------
// Evolution
// ---------------------------------------------------------------------------

void assign_rh_speeds(const Models& m, FrontState& st) {
    for (auto& w : st.waves) {
        w.speed = (w.kind == WaveKind::Rarefaction)
                      ? m.flux.eval(w.u_r, 1)
                      : shock_speed(m.flux, w.u_l, w.u_r);
    }
}

bool advance(const Models& m, FrontState& st, double t_limit,
             std::vector<InteractionRecord>& log) {
    bool perturbed = false;
    for (;;) {
        double best_t = std::numeric_limits<double>::infinity();
        int best_i = -1;
        int ties = 0;
        int tie_i = -1;
        for (std::size_t i = 0; i + 1 < st.waves.size(); ++i) {
            const double dv = st.waves[i].speed - st.waves[i + 1].speed;
            if (dv <= 1e-14) continue;
            const double dx = std::max(0.0, st.waves[i + 1].x - st.waves[i].x);
            const double te = st.time + dx / dv;
            if (te < best_t - kTieTol) {
                best_t = te;
                best_i = static_cast<int>(i);
                ties = 1;
                tie_i = best_i;
            } else if (te <= best_t + kTieTol) {
                ++ties;
                tie_i = static_cast<int>(i);
            }
        }
        if (best_i < 0 || best_t >= t_limit) {
            for (auto& w : st.waves) w.x += w.speed * (t_limit - st.time);
            st.time = t_limit;
            return false;
        }
        if (ties > 1) {
            // deterministic tie-break: nudge the right-most colliding pair so
            // it fires first, and record the perturbation
            st.waves[tie_i].speed += kSpeedPerturb;
            perturbed = true;
            continue;
        }
        for (auto& w : st.waves) w.x += w.speed * (best_t - st.time);
        st.time = best_t;
        const double xcol = 0.5 * (st.waves[best_i].x + st.waves[best_i + 1].x);
        auto rec = resolve_interaction(st.waves[best_i], st.waves[best_i + 1],
                                       st.time, xcol, st.params, st.kset);
        rec.perturbed = perturbed;
        auto it = st.waves.erase(st.waves.begin() + best_i,
                                 st.waves.begin() + best_i + 2);
        for (auto& w : rec.out) {
            Wave nw = w;
            nw.speed = (nw.kind == WaveKind::Rarefaction)
                           ? m.flux.eval(nw.u_r, 1)
                           : shock_speed(m.flux, nw.u_l, nw.u_r);
            it = st.waves.insert(it, nw) + 1;
        }
        log.push_back(rec);
        return true;
    }
}

RunResult run(const Models& m, FrontState initial) {
    initial.params.validate();
    RunResult res;
    assign_rh_speeds(m, initial);
    res.snapshots.push_back(initial);
    FrontState st = std::move(initial);
    while (advance(m, st, st.params.t_end, res.log)) {
        if (res.log.back().perturbed) ++res.perturbations;
        res.snapshots.push_back(st);
        if (res.log.size() > st.params.max_events)
            throw std::runtime_error("front tracking: event budget exhausted");
    }
    res.final_state = std::move(st);
    return res;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double profile_at(const FrontState& st, double x) {
    double u = st.u_left;
    for (const auto& w : st.waves) {
        if (w.x < x) u = w.u_r;
        else break;
    }
    return u;
}

double profile_at(const FrontState& st, double t, double x) {
    double u = st.u_left;
    const double dt = t - st.time;
    for (const auto& w : st.waves)
        if (w.x + w.speed * dt < x) u = w.u_r;
    return u;
}

double weight_at(const FrontState& st, double x) {
    double a = std::pow(st.params.C1, st.big_L());
    for (double k : st.kset) a *= k;
    for (const auto& w : st.waves) {
        if (!(w.x < x)) continue;
        if (w.kind == WaveKind::BigShock)
            a *= st.params.C1;
        else if (w.kind == WaveKind::SmallShock)
            a *= 1.0 - st.params.C0 * w.strength();
    }
    return a;
}

double weight_lower_bound(const FrontParams& p, double V) {
    const double e = std::ceil(2.0 * V / p.eps);
    return std::pow(p.C1, 2.0 * e) * std::pow(0.5, 20.0 * p.C0 * V);
}

void dump_state(std::ostream& os, const FrontState& st) {
    os.precision(17);
    os << "t=" << st.time << "\n";
    for (const auto& w : st.waves)
        os << w.x << " " << w.u_l << " " << w.u_r << " " << wave_kind_name(w.kind)
           << " " << w.ell << " " << w.speed << "\n";
}

} // namespace cclaw
