#pragma once

#include "gdlab/exact_field.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gdlab {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // measured worst values against their limits
    double seconds = 0.0;
};

struct AcceptanceOptions {
    double m = 4000.0;          // Fock parameter; sigma <= 12 needs 0.5 m^{2/5} > 12
    double tolerance_scale = 1.0;  // multiplies the 5/10/15% oracle tolerances
    QuadConfig quad{};
    std::vector<int> only;      // run a subset (empty = all)
};

// Runs criteria 1-9 in order; `report` is called after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report = {});

// "PASS C4 ..." line used by both the acceptance binary and selftest.
[[nodiscard]] std::string format_result(const CriterionResult& r);

}  // namespace gdlab
