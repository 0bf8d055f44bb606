// The twelve acceptance checks behind `verify-suite` and the acceptance
// binary: frozen torsion values, randomized invariance corpora, and the
// manifold-identity verifications, all in exact rational arithmetic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rft {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // counts and intermediate factors for diagnosis
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    /// When > 0, overrides the size of every randomized corpus (the
    /// defaults are the documented sizes: 20/200/500/100/50).
    std::size_t cases = 0;
};

std::vector<CriterionResult> run_verify_suite(const SuiteOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace rft
