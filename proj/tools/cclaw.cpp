// Command-line orchestrator: parses a plain-text config, runs one of the
// workbench commands, and writes CSV/report artifacts plus a manifest into
// the output directory.  Exit codes: 0 success, 1 configuration error,
// 2 verification failure (witness file written).

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "cclaw/admissibility.hpp"
#include "cclaw/config.hpp"
#include "cclaw/curves.hpp"
#include "cclaw/dissipation.hpp"
#include "cclaw/front_tracking.hpp"
#include "cclaw/reference.hpp"
#include "cclaw/verify.hpp"

namespace fs = std::filesystem;
using namespace cclaw;

namespace {

constexpr const char* kCommands[] = {
    "aux",           "admissible",      "calibrate-large", "calibrate-small",
    "dissipation-scan", "fronttrack",   "weight-trace",    "reference",
    "shift",         "cone-experiment", "nonclassical-demo", "verify-all"};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream os(dir / name);
    os.precision(17);
    return os;
}

// canonical config echo for the manifest (independent of input formatting)
std::string config_echo(const RunConfig& c) {
    std::ostringstream os;
    os.precision(17);
    os << "flux = " << c.flux << "\nentropy = " << c.entropy
       << "\nM = " << c.M << "\nb_lo = " << c.b_lo << "\nb_hi = " << c.b_hi
       << "\neps = " << c.eps << "\nC0 = "
       << (c.C0_auto ? std::string("auto") : std::to_string(c.C0))
       << "\nC1 = " << (c.C1_auto ? std::string("auto") : std::to_string(c.C1))
       << "\nh = " << c.h << "\nmode = " << c.mode << "\nT = " << c.T
       << "\nR = " << c.R << "\nv = " << c.v << "\ndx = " << c.dx
       << "\ncfl = " << c.cfl << "\nscan_density = " << c.scan_density
       << "\nu_l = " << c.u_l << "\nu_r = " << c.u_r << "\na = " << c.a
       << "\ndelta = " << c.delta << "\nrng_seed = " << c.rng_seed
       << "\noutput_dir = " << c.output_dir << "\n";
    return os.str();
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const RunConfig& c, const std::string& config_text) {
    auto os = open_out(dir, "manifest.txt");
    os << "command " << command << "\n"
       << "seed " << c.rng_seed << "\n"
       << "input_hash " << fnv1a(config_text) << "\n";
    const auto plan = c.plan();
    if (!plan.empty()) {
        os << "plan";
        for (const auto& s : plan) os << ' ' << s;
        os << "\n";
    }
    os << "-- config --\n" << config_echo(c);
}

int witness(const fs::path& dir, const std::string& what) {
    auto os = open_out(dir, "witness.txt");
    os << what << "\n";
    std::cerr << "verification failure: " << what << "\n";
    return 2;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_aux(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    auto os = open_out(dir, "aux.csv");
    os << "u,phi_tangent,phi_flat0,phi_sharp0\n";
    for (int i = 1; i <= 24; ++i) {
        const double u = 0.05 * i;
        os << u << ',' << phi_tangent(m.flux, u) << ','
           << phi_flat0(m.entropy, m.flux, u) << ','
           << phi_sharp0(m.entropy, m.flux, u) << "\n";
    }
    return 0;
}

int cmd_admissible(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    auto os = open_out(dir, "admissible.txt");
    os << "u_l " << c.u_l << "\nu_r " << c.u_r << "\n"
       << "oleinik " << (is_oleinik(m.flux, c.u_l, c.u_r) ? 1 : 0) << "\n"
       << "eta_entropic "
       << (is_eta_entropic(m.entropy, m.flux, c.u_l, c.u_r) ? 1 : 0) << "\n"
       << "dissipation "
       << entropy_dissipation(m.entropy, m.flux, c.u_l, c.u_r) << "\n";
    if (c.u_l > 0.0 && c.u_l > c.u_r) {
        auto kv = open_out(dir, "kruzhkov.csv");
        kv << "k,entropic\n";
        for (int i = 0; i <= c.scan_density; ++i) {
            const double k =
                -c.M + 0.9 * (c.u_l + c.M) * i / c.scan_density;
            kv << k << ','
               << (is_kruzhkov_entropic(m.flux, c.u_l, c.u_r, k) ? 1 : 0)
               << "\n";
        }
    }
    return 0;
}

int cmd_calibrate_large(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    ScanConfig cfg;
    cfg.pi_grid = c.scan_density;
    cfg.u_minus_grid = std::max(c.scan_density / 5, 16);
    cfg.samples = 20000;
    cfg.seed = c.rng_seed;
    const auto res = calibrate_large(m, ShockPair{c.u_l, c.u_r}, c.eps, cfg);
    auto os = open_out(dir, "calibrate_large.txt");
    os << "found " << (res.found ? 1 : 0) << "\na_star " << res.a_star
       << "\nworst_margin " << res.worst_margin << "\ncandidates_tested "
       << res.candidates_tested << "\n";
    if (!res.found) return witness(dir, "large-shock calibration failed");
    return 0;
}

int cmd_calibrate_small(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    ScanConfig cfg;
    cfg.pi_grid = c.scan_density;
    cfg.u_minus_grid = std::max(c.scan_density / 5, 16);
    cfg.samples = 20000;
    cfg.seed = c.rng_seed;
    const auto res = calibrate_small(m, c.b_lo, c.b_hi, 8.0, cfg);
    auto os = open_out(dir, "calibrate_small.txt");
    os << "found " << (res.found ? 1 : 0) << "\nC0 " << res.C0 << "\ns0_max "
       << res.s0_max << "\nK_fit " << res.K_fit << "\ndetail " << res.detail
       << "\n";
    if (!res.found) return witness(dir, "small-shock calibration failed");
    return 0;
}

int cmd_dissipation_scan(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    const ShockPair s{c.u_l, c.u_r};
    const auto w = (std::abs(s.s0()) >= c.eps) ? WeightSpec::large(c.a)
                                               : WeightSpec::small(c.C0);
    const auto pi = compute_pi(m, s, w);
    const double pad = 0.5 * pi.diameter();
    auto os = open_out(dir, "dissipation.csv");
    os << "u,eta_tilde,q_tilde,d_cont,in_pi\n";
    for (int i = 0; i <= c.scan_density; ++i) {
        const double u =
            pi.lo - pad + (pi.diameter() + 2.0 * pad) * i / c.scan_density;
        if (std::abs(u) > c.M) continue;
        os << u << ',' << eta_tilde(m, s, w, u) << ',' << q_tilde(m, s, w, u)
           << ',' << d_cont(m, s, w, u) << ',' << (pi.contains(u) ? 1 : 0)
           << "\n";
    }
    auto rs = open_out(dir, "pi.txt");
    rs << "lo " << pi.lo << "\nhi " << pi.hi << "\ndiameter " << pi.diameter()
       << "\n";
    return 0;
}

RunResult run_fronttrack(const RunConfig& c, const Models& m) {
    auto p = c.make_front_params();
    auto disc = discretize_initial(
        m, [&](double x) { return x < 0.0 ? c.u_l : c.u_r; }, p);
    return run(m, disc.state);
}

int cmd_fronttrack(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    auto res = run_fronttrack(c, m);
    {
        auto os = open_out(dir, "trajectory.txt");
        for (const auto& st : res.snapshots) dump_state(os, st);
        dump_state(os, res.final_state);
    }
    auto os = open_out(dir, "interactions.csv");
    os << "time,position,taxonomy,delta_L,k_added\n";
    for (const auto& rec : res.log) {
        os << rec.time << ',' << rec.x << ',' << rec.taxonomy << ','
           << rec.delta_L << ',';
        for (std::size_t i = 0; i < rec.k_added.size(); ++i)
            os << (i ? ";" : "") << rec.k_added[i];
        os << "\n";
    }
    return 0;
}

int cmd_weight_trace(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    auto res = run_fronttrack(c, m);
    auto os = open_out(dir, "weight.csv");
    os << "x,a\n";
    for (int i = 0; i <= c.scan_density; ++i) {
        const double x = -4.0 + 8.0 * i / c.scan_density;
        os << x << ',' << weight_at(res.final_state, x) << "\n";
    }
    return 0;
}

GridSolution run_reference(const RunConfig& c, const Models& m) {
    auto gp = c.make_grid_params();
    return godunov_run(
        m, [&](double x) { return x < 0.0 ? c.u_l : c.u_r; }, gp);
}

int cmd_reference(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    auto g = run_reference(c, m);
    auto os = open_out(dir, "grid.txt");
    dump_grid(os, g);
    return 0;
}

int cmd_shift(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    auto g = run_reference(c, m);
    const ShockPair s{c.u_l, c.u_r};
    const auto w = WeightSpec::large(c.a);
    const auto pi = compute_pi(m, s, w);
    const auto fit = fit_qcontrol(m, s, w, pi);
    ShiftSpec spec;
    spec.pi = pi;
    spec.velocity_drop = fit.C2;  // single shock: L = 0
    spec.t0 = 0.0;
    spec.x0 = 0.0;
    auto path = filippov_shift(m, g, spec);
    auto os = open_out(dir, "shift.csv");
    dump_shift(os, path);
    auto rs = open_out(dir, "shift.txt");
    rs << "lipschitz_bound " << path.lipschitz_bound << "\ntruncated "
       << (path.truncated ? 1 : 0) << "\nC2 " << fit.C2 << "\n";
    return 0;
}

int cmd_cone(const RunConfig& c, const fs::path& dir) {
    auto m = c.make_models();
    ConeParams p;
    p.R = c.R;
    p.v = c.v;
    p.front = c.make_front_params();
    p.grid = c.make_grid_params();
    auto u0 = [&](double x) { return x < 0.0 ? c.u_l : c.u_r; };
    const double norm = std::sqrt(std::sqrt(3.14159265358979 / 20.0));
    auto wild0 = [&](double x) {
        return u0(x) + c.delta * std::exp(-10.0 * x * x) / norm;
    };
    auto rep = cone_stability_experiment(m, u0, wild0, p);
    auto os = open_out(dir, "cone.txt");
    dump_cone_report(os, rep);
    return 0;
}

int cmd_nonclassical(const RunConfig& c, const fs::path& dir) {
    auto f = FluxModel::cubic(c.M);
    Models m{f, EntropyModel::exponential(f)};  // single-entropy setting
    auto gp = c.make_grid_params();
    auto res = nonclassical_demo(m, c.u_l, c.u_r, {}, gp);
    auto os = open_out(dir, "nonclassical.txt");
    dump_nonclassical(os, res);
    if (!res.ok || res.l2_margin <= 0.0)
        return witness(dir, "no admissible two-shock profile found");
    return 0;
}

int cmd_verify_all(const RunConfig& c, const fs::path& dir) {
    Verifier verifier(c.rng_seed);
    auto os = open_out(dir, "verify.txt");
    std::ostringstream both;
    auto results = verifier.run_all(&both);
    os << both.str();
    std::cout << both.str();
    std::string failures;
    for (const auto& r : results)
        if (!r.passed)
            failures += "criterion " + std::to_string(r.id) + " [" + r.name +
                        "]: " + r.detail + "\n";
    if (!failures.empty()) return witness(dir, failures);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical workbench for scalar conservation laws with "
                 "concave-convex flux"};
    std::string config_path;
    std::string out_dir;
    std::string command;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "config file (key = value lines)");
    app.add_option("--seed", seed, "override rng_seed");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--command", command, "command to run")->required();
    CLI11_PARSE(app, argc, argv);

    bool known = false;
    for (const char* c : kCommands) known = known || command == c;
    if (!known) {
        std::cerr << "unknown command '" << command << "'; available:";
        for (const char* c : kCommands) std::cerr << ' ' << c;
        std::cerr << "\n";
        return 1;
    }

    std::string config_text;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot open config file '" << config_path << "'\n";
            return 1;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        config_text = ss.str();
    }
    auto parsed = parse_config(config_text);
    if (seed) parsed.config.rng_seed = *seed;
    if (!out_dir.empty()) parsed.config.output_dir = out_dir;
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) std::cerr << e << "\n";
        return 1;
    }
    const RunConfig& c = parsed.config;
    const fs::path dir = c.output_dir;

    try {
        write_manifest(dir, command, c, config_text);
        if (command == "aux") return cmd_aux(c, dir);
        if (command == "admissible") return cmd_admissible(c, dir);
        if (command == "calibrate-large") return cmd_calibrate_large(c, dir);
        if (command == "calibrate-small") return cmd_calibrate_small(c, dir);
        if (command == "dissipation-scan") return cmd_dissipation_scan(c, dir);
        if (command == "fronttrack") return cmd_fronttrack(c, dir);
        if (command == "weight-trace") return cmd_weight_trace(c, dir);
        if (command == "reference") return cmd_reference(c, dir);
        if (command == "shift") return cmd_shift(c, dir);
        if (command == "cone-experiment") return cmd_cone(c, dir);
        if (command == "nonclassical-demo") return cmd_nonclassical(c, dir);
        if (command == "verify-all") return cmd_verify_all(c, dir);
    } catch (const std::exception& e) {
        std::cerr << "configuration rejected: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
