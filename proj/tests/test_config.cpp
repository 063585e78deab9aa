// Config parser tests: defaults, comments, auto constants and the implied
// plan, and all-errors reporting with line numbers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cclaw/config.hpp"

using namespace cclaw;

TEST_CASE("parse_config: minimal file fills defaults") {
    auto res = parse_config("flux = cubic\nentropy = quadratic\nh = 0.05\n");
    REQUIRE(res.ok());
    CHECK(res.config.h == doctest::Approx(0.05));
    CHECK(res.config.eps == doctest::Approx(0.1));
    CHECK(res.config.C0 == doctest::Approx(2.0));
    CHECK(res.config.mode == "rh");
    CHECK(res.config.plan().empty());
    CHECK(res.config.make_models().entropy.name() == "quadratic");
}

TEST_CASE("parse_config: comments, spacing, and every key") {
    const char* text =
        "# full configuration\n"
        "flux = cubic\n"
        "entropy = exponential   # single entropy\n"
        "M = 3.0\n"
        "b_lo = 0.4\n"
        "b_hi = 1.6\n"
        "eps = 0.2\n"
        "C0 = 1.0\n"
        "C1 = 0.5\n"
        "h = 0.05\n"
        "mode = shifted\n"
        "T = 0.5\n"
        "R = 2.0\n"
        "v = 3.0\n"
        "dx = 0.01\n"
        "cfl = 0.8\n"
        "scan_density = 128\n"
        "u_l = 1.2\n"
        "u_r = 0.3\n"
        "a = 0.1\n"
        "delta = 0.02\n"
        "rng_seed = 42\n"
        "output_dir = results\n";
    auto res = parse_config(text);
    REQUIRE(res.ok());
    CHECK(res.config.entropy == "exponential");
    CHECK(res.config.M == doctest::Approx(3.0));
    CHECK(res.config.mode == "shifted");
    CHECK(res.config.rng_seed == 42);
    CHECK(res.config.output_dir == "results");
    CHECK(res.config.make_models().entropy.name() == "exponential");
}

TEST_CASE("parse_config: auto constants produce calibration stages") {
    auto res = parse_config("C0 = auto\nC1 = auto\n");
    REQUIRE(res.ok());
    CHECK(res.config.C0_auto);
    CHECK(res.config.C1_auto);
    auto plan = res.config.plan();
    REQUIRE(plan.size() == 2);
    CHECK(plan[0] == "calibrate-small");
    CHECK(plan[1] == "calibrate-large");
}

TEST_CASE("parse_config: all errors reported with line numbers") {
    const char* text =
        "eps = -1\n"
        "bogus = 3\n"
        "dx = twelve\n"
        "not a pair\n"
        "cfl = 1.5\n";
    auto res = parse_config(text);
    CHECK(!res.ok());
    REQUIRE(res.errors.size() >= 5);
    auto has = [&](const std::string& frag) {
        for (const auto& e : res.errors)
            if (e.find(frag) != std::string::npos) return true;
        return false;
    };
    CHECK(has("eps must be positive"));
    CHECK(has("line 2: unknown key 'bogus'"));
    CHECK(has("line 3: malformed number 'twelve'"));
    CHECK(has("line 4: expected 'key = value'"));
    CHECK(has("cfl must lie in (0,1)"));
}

TEST_CASE("parse_config: constant compatibility is validated") {
    auto res = parse_config("eps = 0.1\nh = 0.09\n");
    CHECK(!res.ok());
    auto res2 = parse_config("eps = 0.3\nC0 = 2.0\nh = 0.05\n");
    CHECK(!res2.ok());  // C0*eps > 1/2
    auto res3 = parse_config("C1 = 0.9\n");
    CHECK(!res3.ok());  // C1 > 1 - 2*C0*eps = 0.6
}
