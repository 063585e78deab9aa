#pragma once

// Acceptance-criteria runners: twelve numbered checks covering the auxiliary
// curves, admissibility predicates, Pi geometry, dissipation calibrations,
// front-tracking structure, convergence to the Godunov reference, the cone
// stability experiment, the non-uniqueness demo, and the product lemma.
// Shared by the acceptance test binary and the CLI's verify-all command.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cclaw/dissipation.hpp"

namespace cclaw {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

class Verifier {
  public:
    explicit Verifier(std::uint64_t seed = 20260823);

    static constexpr int kCriteria = 12;
    static const char* criterion_name(int id);

    // Run one criterion (1-based id).
    CriterionResult run(int id);

    // Run all criteria in order; when os is given, one "criterion <id>
    // [<name>] PASS|FAIL (<detail>) <seconds>s" line is printed per check.
    std::vector<CriterionResult> run_all(std::ostream* os = nullptr);

  private:
    std::uint64_t seed_;
    // band calibration shared by criteria 5 and 6
    std::optional<CalibrateSmallResult> small_cal_;
    const CalibrateSmallResult& band_calibration();

    CriterionResult c1_appendix_value();
    CriterionResult c2_closed_forms();
    CriterionResult c3_kruzhkov_equivalence();
    CriterionResult c4_pi_geometry();
    CriterionResult c5_small_rate();
    CriterionResult c6_dmax_certification();
    CriterionResult c7_large_calibration();
    CriterionResult c8_front_tracking_suite();
    CriterionResult c9_convergence();
    CriterionResult c10_cone_experiment();
    CriterionResult c11_nonclassical();
    CriterionResult c12_product_lemma();
};

} // namespace cclaw
