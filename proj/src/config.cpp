#include "cclaw/config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cclaw {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
}

bool parse_double(const std::string& v, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(v, &pos);
        return pos == v.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_u64(const std::string& v, std::uint64_t& out) {
    try {
        std::size_t pos = 0;
        out = std::stoull(v, &pos);
        return pos == v.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& v, int& out) {
    try {
        std::size_t pos = 0;
        out = std::stoi(v, &pos);
        return pos == v.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

std::vector<std::string> RunConfig::validate() const {
    std::vector<std::string> errs;
    auto positive = [&](double x, const char* name) {
        if (!(x > 0.0)) errs.push_back(std::string(name) + " must be positive");
    };
    if (flux != "cubic") errs.push_back("flux must be 'cubic'");
    if (entropy != "quadratic" && entropy != "exponential")
        errs.push_back("entropy must be 'quadratic' or 'exponential'");
    positive(M, "M");
    positive(eps, "eps");
    positive(C0, "C0");
    positive(C1, "C1");
    positive(h, "h");
    positive(T, "T");
    positive(R, "R");
    positive(dx, "dx");
    positive(delta, "delta");
    if (v < 0.0) errs.push_back("v must be nonnegative");
    if (!(cfl > 0.0 && cfl < 1.0)) errs.push_back("cfl must lie in (0,1)");
    if (!(b_lo < b_hi)) errs.push_back("b_lo must be below b_hi");
    if (scan_density < 8) errs.push_back("scan_density must be at least 8");
    if (mode != "rh" && mode != "shifted")
        errs.push_back("mode must be 'rh' or 'shifted'");
    if (!(a > 0.0 && a < 1.0)) errs.push_back("a must lie in (0,1)");
    if (h > 0.0 && eps > 0.0 && h > 0.5 * eps + 1e-15)
        errs.push_back("h must be at most eps/2");
    if (C0 > 0.0 && eps > 0.0 && !C0_auto && C0 * eps > 0.5 + 1e-15)
        errs.push_back("C0*eps must be at most 1/2");
    if (C1 > 0.0 && !C1_auto && !C0_auto && C1 > 1.0 - 2.0 * C0 * eps + 1e-15)
        errs.push_back("C1 must be at most 1 - 2*C0*eps");
    if (std::max(std::abs(b_lo), std::abs(b_hi)) >= M)
        errs.push_back("convex region must lie inside (-M, M)");
    return errs;
}

std::vector<std::string> RunConfig::plan() const {
    std::vector<std::string> stages;
    if (C0_auto) stages.push_back("calibrate-small");
    if (C1_auto) stages.push_back("calibrate-large");
    return stages;
}

Models RunConfig::make_models() const {
    auto f = FluxModel::cubic(M);
    if (entropy == "exponential")
        return Models{f, EntropyModel::exponential(f)};
    return Models{f, EntropyModel::quadratic(f)};
}

FrontParams RunConfig::make_front_params() const {
    FrontParams p;
    p.eps = eps;
    p.h = h;
    p.C0 = C0;
    p.C1 = C1;
    p.t_end = T;
    return p;
}

GodunovParams RunConfig::make_grid_params() const {
    GodunovParams p;
    p.dx = dx;
    p.cfl = cfl;
    p.t_end = T;
    return p;
}

ParseResult parse_config(const std::string& text) {
    ParseResult res;
    RunConfig& c = res.config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto err = [&](const std::string& msg) {
        res.errors.push_back("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            err("expected 'key = value'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) {
            err("expected 'key = value'");
            continue;
        }
        auto want_double = [&](double& slot) {
            if (!parse_double(val, slot)) err("malformed number '" + val + "'");
        };
        if (key == "flux") c.flux = val;
        else if (key == "entropy") c.entropy = val;
        else if (key == "M") want_double(c.M);
        else if (key == "b_lo") want_double(c.b_lo);
        else if (key == "b_hi") want_double(c.b_hi);
        else if (key == "eps") want_double(c.eps);
        else if (key == "C0") {
            if (val == "auto") c.C0_auto = true;
            else want_double(c.C0);
        } else if (key == "C1") {
            if (val == "auto") c.C1_auto = true;
            else want_double(c.C1);
        } else if (key == "h") want_double(c.h);
        else if (key == "mode") c.mode = val;
        else if (key == "T") want_double(c.T);
        else if (key == "R") want_double(c.R);
        else if (key == "v") want_double(c.v);
        else if (key == "dx") want_double(c.dx);
        else if (key == "cfl") want_double(c.cfl);
        else if (key == "scan_density") {
            if (!parse_int(val, c.scan_density))
                err("malformed integer '" + val + "'");
        } else if (key == "u_l") want_double(c.u_l);
        else if (key == "u_r") want_double(c.u_r);
        else if (key == "a") want_double(c.a);
        else if (key == "delta") want_double(c.delta);
        else if (key == "rng_seed") {
            if (!parse_u64(val, c.rng_seed))
                err("malformed integer '" + val + "'");
        } else if (key == "output_dir") c.output_dir = val;
        else err("unknown key '" + key + "'");
    }
    for (const auto& v : res.config.validate()) res.errors.push_back(v);
    return res;
}

} // namespace cclaw
